// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wavecp contributors

// Scaling-filter coefficient tables for the built-in catalog.
// Daubechies and LA(8) via spectral factorization of the half-band
// polynomial; coiflets by Newton refinement of the defining system
// (orthonormality + wavelet/scaling moment conditions), both carried
// out in 60-digit arithmetic and rounded to double. validate_filter()
// re-checks every invariant in the test suite.

#include "wavecp/filters.hpp"

#include <array>
#include <span>

namespace wavecp::detail {
namespace {

constexpr std::array<double, 2> k_haar{{
    0.7071067811865475244008444, 0.7071067811865475244008444
}};

constexpr std::array<double, 4> k_db2{{
    0.4829629131445341433748716, 0.8365163037378079055752938,
    0.2241438680420133810259728, -0.1294095225512603811744494
}};

constexpr std::array<double, 6> k_db3{{
    0.3326705529500826159985116, 0.8068915093110925764944936,
    0.4598775021184915700951519, -0.1350110200102545886963899,
    -0.08544127388202666169281917, 0.03522629188570953660274066
}};

constexpr std::array<double, 8> k_db4{{
    0.2303778133088965008632912, 0.7148465705529156470899220,
    0.6308807679298589078817163, -0.02798376941685985421141375,
    -0.1870348117190930840795707, 0.03084138183556076362721936,
    0.03288301166688519973540751, -0.01059740178506903210488321
}};

constexpr std::array<double, 10> k_db5{{
    0.1601023979741929144807237, 0.6038292697971896705401193,
    0.7243085284377729277280712, 0.1384281459013207315053971,
    -0.2422948870663820318625714, -0.03224486958463837464847976,
    0.07757149384004571352313049, -0.006241490212798274274190519,
    -0.01258075199908199946850974, 0.003335725285473771277998183
}};

constexpr std::array<double, 12> k_db6{{
    0.1115407433501094636213239, 0.4946238903984530856772042,
    0.7511339080210953506789345, 0.3152503517091976290859897,
    -0.2262646939654398200763145, -0.1297668675672619355622896,
    0.09750160558732304910234355, 0.02752286553030572862554084,
    -0.03158203931748602956507908, 0.0005538422011614961392519184,
    0.004777257510945510639635975, -0.001077301085308479564852622
}};

constexpr std::array<double, 14> k_db7{{
    0.07785205408500917901996352, 0.3965393194819173065390004,
    0.7291320908462351199169431, 0.4697822874051931224715912,
    -0.1439060039285649754050684, -0.2240361849938749826381404,
    0.07130921926683026475087657, 0.08061260915108307191292248,
    -0.03802993693501441357959206, -0.01657454163066688065410767,
    0.01255099855609984061298989, 0.0004295779729213665211321291,
    -0.001801640704047490915268263, 0.0003537137999745202484462958
}};

constexpr std::array<double, 16> k_db8{{
    0.05441584224310400995500941, 0.3128715909142999706591624,
    0.6756307362972898068078008, 0.5853546836542067127712655,
    -0.01582910525634930566738055, -0.2840155429615469265162031,
    0.0004724845739132827703605900, 0.1287474266204784588570293,
    -0.01736930100180754616961615, -0.04408825393079475150676372,
    0.01398102791739828164872293, 0.008746094047405776716382743,
    -0.004870352993451574310422182, -0.0003917403733769470462980804,
    0.0006754494064505693663695476, -0.0001174767841247695337306282
}};

constexpr std::array<double, 18> k_db9{{
    0.03807794736387834658869766, 0.2438346746125903537320416,
    0.6048231236901111119030769, 0.6572880780513005380782126,
    0.1331973858250075761909549, -0.2932737832791749088064032,
    -0.09684078322297646051350813, 0.1485407493381063801350727,
    0.03072568147933337921231740, -0.06763282906132997367564227,
    0.0002509471148314519575871897, 0.02236166212367909720537378,
    -0.004723204757751397277925708, -0.004281503682463429834496795,
    0.001847646883056226476619129, 0.0002303857635231959672052164,
    -0.0002519631889427101369749887, 0.00003934732031627159948068988
}};

constexpr std::array<double, 20> k_db10{{
    0.02667005790055555358661745, 0.1881768000776914890208930,
    0.5272011889317255864817448, 0.6884590394536035657418718,
    0.2811723436605774607487270, -0.2498464243273153794161019,
    -0.1959462743773770435042993, 0.1273693403357932600826772,
    0.09305736460357235116035229, -0.07139414716639708714533609,
    -0.02945753682187581285828324, 0.03321267405934100173976365,
    0.003606553566956169655423291, -0.01073317548333057504431811,
    0.001395351747052901165789318, 0.001992405295185056117158742,
    -0.0006858566949597116265613710, -0.0001164668551292854509514810,
    0.00009358867032006959133405013, -0.00001326420289452124481243668
}};

constexpr std::array<double, 8> k_la8{{
    -0.07576571478950221322774620, -0.02963552764600249176436918,
    0.4976186676327749899796055, 0.8037387518051320808788056,
    0.2978577956053060514029012, -0.09921954357663353258520801,
    -0.01260396726203130375391610, 0.03222310060405146787161592
}};

constexpr std::array<double, 6> k_coif1{{
    -0.01565572813579199252566617, -0.07273261951252644802443938,
    0.3848648468648577472517545, 0.8525720202116004204497231,
    0.3378976624574817696747560, -0.07273261951252644802443938
}};

constexpr std::array<double, 12> k_coif2{{
    -0.0007205494455203469950737557, -0.001823208870911032094609829,
    0.005611434819368834245634949, 0.02368017194684776880592777,
    -0.05943441864643108730685501, -0.07648859907828075427761277,
    0.4170051844232390480478095, 0.8127236354494134953442144,
    0.3861100668227628504190415, -0.06737255472372559380456363,
    -0.04146493678687177400971285, 0.01638733646320364042748845
}};

constexpr std::array<double, 18> k_coif3{{
    -0.00003459977319727277388345672, -0.00007098330250637900561119138,
    0.0004662169598204028694690877, 0.001117518770830630223506747,
    -0.002574517688136797010278603, -0.009007976136730623898690591,
    0.01588054486366945094186675, 0.03455502757329773301272858,
    -0.08230192710629981848663878, -0.07179982161915483401323676,
    0.4284834763773699810147791, 0.7937772226260871747918080,
    0.4051769024091181992724762, -0.06112339000297254127692570,
    -0.06577191128146936718350160, 0.02345269614207716624275037,
    0.007782596425672745756555727, -0.003793512864380801675485128
}};

constexpr std::array<double, 24> k_coif4{{
    -0.000001784990914493346681267548, -0.000003259647940030750678302346,
    0.00003122986159919526530494755, 0.00006233885431278718112593668,
    -0.0002599743371222568031968013, -0.0005890202246332164779852788,
    0.001266561078925660206021299, 0.003751434697146086349179148,
    -0.005658283800130883706855208, -0.01521172818769721159723578,
    0.02508225333794960681821192, 0.03933442260558914633132668,
    -0.09622042453595263696014467, -0.06662747236681715660425633,
    0.4343860331143565424429181, 0.7822389344242825898264758,
    0.4153084270006822731294693, -0.05607731960356925565970518,
    -0.08126671024919372334475952, 0.02668230466960483260703486,
    0.01606894713157502651287763, -0.007346167936268049768871523,
    -0.001629492425226785812321354, 0.0008923139025370029644343567
}};

constexpr std::array<double, 30> k_coif5{{
    -9.604010112767892125027636e-8, -0.0000001623799517204833517470974,
    0.000002061220398578878156703381, 0.000003700727711339479516449796,
    -0.00002127022167251561381919105, -0.00004121986192426550219701320,
    0.0001403563281237324269902880, 0.0003018579416682447498632501,
    -0.0006375589261258811091711894, -0.001661627303929878774564745,
    0.002431575442538288490579461, 0.006761520220620416802447689,
    -0.009159507338676162994944021, -0.01975839160096546513890474,
    0.03267479946705735095365614, 0.04128753047211783146902068,
    -0.1055631513073372264696060, -0.06203775157498195089253406,
    0.4379823066591633179268224, 0.7742936228603274516029265,
    0.4215712667307543517730689, -0.05204667025355475665111820,
    -0.09192158806008608329572694, 0.02816974427053235189367516,
    0.02340832211892778307799160, -0.01013158484690027491468212,
    -0.004159312627578639655500733, 0.002178294377845694760395398,
    0.0003585777411617576912682213, -0.0002120818620674939996481903
}};

}  // namespace

const CatalogEntry* catalog_begin();
const CatalogEntry* catalog_end();

namespace {
const CatalogEntry k_catalog[] = {
    {"haar", WaveletFamily::haar, 1, 1, std::span<const double>(k_haar)},
    {"db2", WaveletFamily::daubechies, 2, 2, std::span<const double>(k_db2)},
    {"db3", WaveletFamily::daubechies, 3, 3, std::span<const double>(k_db3)},
    {"db4", WaveletFamily::daubechies, 4, 4, std::span<const double>(k_db4)},
    {"db5", WaveletFamily::daubechies, 5, 5, std::span<const double>(k_db5)},
    {"db6", WaveletFamily::daubechies, 6, 6, std::span<const double>(k_db6)},
    {"db7", WaveletFamily::daubechies, 7, 7, std::span<const double>(k_db7)},
    {"db8", WaveletFamily::daubechies, 8, 8, std::span<const double>(k_db8)},
    {"db9", WaveletFamily::daubechies, 9, 9, std::span<const double>(k_db9)},
    {"db10", WaveletFamily::daubechies, 10, 10, std::span<const double>(k_db10)},
    {"la8", WaveletFamily::least_asymmetric, 8, 4, std::span<const double>(k_la8)},
    {"coif1", WaveletFamily::coiflet, 1, 2, std::span<const double>(k_coif1)},
    {"coif2", WaveletFamily::coiflet, 2, 4, std::span<const double>(k_coif2)},
    {"coif3", WaveletFamily::coiflet, 3, 6, std::span<const double>(k_coif3)},
    {"coif4", WaveletFamily::coiflet, 4, 8, std::span<const double>(k_coif4)},
    {"coif5", WaveletFamily::coiflet, 5, 10, std::span<const double>(k_coif5)},
};
}  // namespace

const CatalogEntry* catalog_begin() { return k_catalog; }
const CatalogEntry* catalog_end() { return k_catalog + sizeof(k_catalog) / sizeof(k_catalog[0]); }

}  // namespace wavecp::detail
