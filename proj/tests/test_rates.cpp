#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lambdaosc/params.hpp"
#include "lambdaosc/rates.hpp"

using namespace lambdaosc;

namespace {

// Independent extended-precision evaluation of every coefficient, written
// straight from the closed forms in long double arithmetic.
struct LongTables {
    long double base[7];
    long double c1[7];
    long double c2[12];
    long double em[6];
};

LongTables long_eval(long double w23, long double O0, long double g2,
                     long double g3, long double gam) {
    const long double Om = sqrtl(2 * O0 * O0 + (w23 / 2) * (w23 / 2));
    const long double s = w23 / (2 * Om);
    const long double c = sqrtl(2.0L) * O0 / Om;
    const long double c2_ = c * c, s2 = s * s, c4 = c2_ * c2_;
    const long double gp = g2 * (1 + s) * (1 + s) + g3 * (1 - s) * (1 - s);
    const long double gm = g2 * (1 - s) * (1 - s) + g3 * (1 + s) * (1 + s);
    auto p4 = [](long double x) { return x * x * x * x; };
    const long double Gp = gp * c2_ / 8 + gam * p4(1 - s) / 16;
    const long double Gm = gm * c2_ / 8 + gam * p4(1 + s) / 16;
    const long double g0p = (g3 * (1 - s) - g2 * (1 + s)) * s * c2_ / 2;
    const long double g0m = -(g3 * (1 + s) - g2 * (1 - s)) * s * c2_ / 2;
    const long double g00 = (g2 + g3) * c4 / 4;
    LongTables t;
    long double* b = t.base;
    b[0] = gp; b[1] = gm; b[2] = Gp; b[3] = Gm; b[4] = g0p; b[5] = g0m;
    b[6] = g00;
    long double* c1 = t.c1;
    c1[0] = ((gm + gp) * s2 + gam * c2_ * (1 + s2)) / 2;
    c1[1] = 2 * g00 + (gm + gp) * s2 / 2 + 3 * gam * c2_ * (1 + s2) / 4;
    c1[2] = gam * s * c2_ / 2;
    c1[3] = ((gp - gm) * s2 - 2 * gam * s * c2_) / 2;
    c1[4] = 2 * (Gm - Gp) + (gp - gm) * s2 / 2 - gam * s * c2_ / 2;
    c1[5] = 2 * (g00 + Gm + Gp + gam * c2_ * (1 + s2) / 8);
    c1[6] = (g2 + g3) * c2_ / 2 + 2 * g00 + Gm + Gp + gam * c2_ * (1 + s2) / 4;
    long double* d = t.c2;
    d[0] = c1[0]; d[1] = c1[1]; d[2] = gam * s * c2_ / 2;
    d[3] = c1[3]; d[4] = -c1[4]; d[5] = c1[5];
    d[6] = g2 * c2_ * (1 + 3 * s) * (1 + 3 * s) / 8 +
           g3 * c2_ * (1 - 3 * s) * (1 - 3 * s) / 8 + (gp + gm) * s2 / 4 +
           g00 + Gm + 9 * gam * c4 / 16 +
           gam * c2_ * ((1 + s) * (1 + s) + (1 - s) * (1 - s) / 2) / 4;
    d[7] = g0p + gam * c2_ * (1 - s) * (1 - s) / 4;
    d[8] = g2 * c2_ * (1 - 3 * s) * (1 - 3 * s) / 8 +
           g3 * c2_ * (1 + 3 * s) * (1 + 3 * s) / 8 + (gp + gm) * s2 / 4 +
           g00 + Gp + 9 * gam * c4 / 16 +
           gam * c2_ * ((1 - s) * (1 - s) + (1 + s) * (1 + s) / 2) / 4;
    d[9] = g0m + gam * c2_ * (1 + s) * (1 + s) / 4;
    d[10] = g0p + gam * c2_ * (1 - s) * (1 - s) / 4;
    d[11] = c1[6];
    long double* e = t.em;
    e[0] = gp * s2 / 2 + gam * c2_ * (1 - s) * (1 - s) / 4;
    e[1] = gm * s2 / 2 + gam * c2_ * (1 + s) * (1 + s) / 4;
    e[2] = 2 * g00 + 2 * Gm + gam * c2_ * (1 + s) * (1 + s) / 4;
    e[3] = 2 * g00 + 2 * Gp + gam * c2_ * (1 - s) * (1 - s) / 4;
    e[4] = gp * c2_ / 4 + gam * p4(1 - s) / 8;
    e[5] = gm * c2_ / 4 + gam * p4(1 + s) / 8;
    return t;
}

struct Tables {
    std::vector<double> base, c1, c2, em;
};

Tables eval(double w23, double O0, double g2, double g3, double gam) {
    PhysicalParams p;
    p.omega23 = w23;
    p.Omega0 = O0;
    p.gamma2 = g2;
    p.gamma3 = g3;
    p.gamma = gam;
    const DressedParams d = derive_dressed(p);
    const BaseRates b = base_rates(d, g2, g3, gam);
    const CaseIRates c1 = case1_rates(b, d, g2, g3, gam);
    const CaseIIRates c2 = case2_rates(b, d, g2, g3, gam);
    const EmitterRates em = emitter_rates(b, d, gam);
    Tables t;
    t.base = {b.gamma_plus, b.gamma_minus, b.Gamma_plus, b.Gamma_minus,
              b.gamma0_plus, b.gamma0_minus, b.gamma00};
    t.c1 = {c1.g1_0, c1.g1_1, c1.g1_2, c1.g2_0, c1.g2_1, c1.g2_2, c1.g3_3};
    t.c2 = {c2.t1_0, c2.t1_1, c2.t1_2, c2.t2_0, c2.t2_1, c2.t2_2,
            c2.t3_3, c2.t3_7, c2.t5_5, c2.t5_9, c2.t9_5, c2.t11_11};
    t.em = {em.g11_plus, em.g11_minus, em.g22_plus,
            em.g22_minus, em.g33_plus, em.g33_minus};
    return t;
}

// golden rate-table values, frozen from an independent 50-digit evaluation
struct GoldenRates {
    double omega23, Omega0, gamma2, gamma3, gamma;
    double base[7];
    double c1[7];
    double c2[12];
    double em[6];
};

const GoldenRates kGolden[10] = {
  {19.377433480937782, 10.973274313651213, 0.058839139542969834, 0.15559906118468811, 0.5945130990530384,
   {0.17209458937687060, 0.37706729011399625, 0.017297944348798463, 0.23731016806863415, -0.0032017670033743011, -0.040072946428073279, 0.027755187069608716},
   {0.35088467490821581, 0.54333200419948944, 0.11327210054326555, -0.25528819260569596, 0.29800835537724096, 0.70166355412613886, 0.52420317256364747},
   {0.35088467490821581, 0.54333200419948944, 0.11327210054326555, -0.25528819260569596, -0.29800835537724096, 0.70166355412613886, 0.77906525137084007, 0.020463087605416354, 0.50108769624478730, 0.21013610926724847, 0.020463087605416354, 0.52420317256364747},
   {0.047798241151259923, 0.30308643375695588, 0.78033976597180749, 0.11377111744560501, 0.034595888697596926, 0.47462033613726830}},
  {58.187957299734265, 10.014130684383735, 0.26333318090987851, 1.6681425670376939, 0.79073374006699948,
   {0.96673817293746210, 6.0191871443012691, 0.023153369651324508, 0.78701212656589607, -0.028577965977721516, -0.27053670171340362, 0.017718542396163562},
   {2.9608224879155584, 3.0647412398394342, 0.068096404373237554, -2.1784998229570144, -0.58268590475463374, 1.7242497443583169, 1.0990786667789861},
   {2.9608224879155584, 3.0647412398394342, 0.068096404373237554, -2.1784998229570144, 0.58268590475463374, 1.7242497443583169, 2.5710356814250702, -0.028192703219410406, 2.1020186237407842, -0.13395863020861740, -0.028192703219410406, 1.0990786667789861},
   {0.39116133247927200, 2.5696611554362864, 1.7460394094289055, 0.082129086853287251, 0.046306739302649017, 1.5740242531317921}},
  {18.326325712144754, 20.593852489932171, 1.6814402799623565, 1.0125773104828262, 0.2888248264996881,
   {3.3381540604604662, 2.5351951158040473, 0.38401594191400202, 0.33993167144058674, -0.20172943268362661, -0.019070833727697128, 0.55764008158669624},
   {0.40775451537530875, 1.5946550717549434, 0.039437329138713055, -0.042712383861075621, -0.091443595669193122, 2.6347957830888122, 3.1365284661132778},
   {0.40775451537530875, 1.5946550717549434, 0.039437329138713055, -0.042712383861075621, 0.091443595669193122, 2.6347957830888122, 1.9833071571993244, -0.16954636861609744, 1.7139662001001324, 0.091986888617258148, -0.16954636861609744, 3.1365284661132778},
   {0.18252106575711656, 0.22523344961819219, 1.9062012283995212, 1.9154951110689257, 0.76803188382800404, 0.67986334288117348}},
  {55.704345845207691, 14.858982336716471, 0.6108108599901596, 1.0929287494503208, 0.52484671774682967,
   {2.0197225740081925, 3.5591865868749288, 0.091635083759808135, 0.50442416984963432, -0.12711506133787222, -0.26672364422673394, 0.056046483218698505},
   {1.9334463776710324, 2.1234669147251685, 0.075990860430994289, -0.64249656151763328, 0.25907247109301338, 1.3821390442730210, 1.0950921098832786},
   {1.9334463776710324, 2.1234669147251685, 0.075990860430994289, -0.64249656151763328, -0.25907247109301338, 1.3821390442730210, 2.0586154821835424, -0.12517835115212743, 1.7792484099960145, -0.11280521317900057, -0.12517835115212743, 1.0950921098832786},
   {0.64547490807669957, 1.2879714695943329, 1.2748597371843990, 0.29729984414275807, 0.18327016751961627, 1.0088483396992686}},
  {46.452657468233539, 29.245652972551525, 0.49662054604577971, 0.57356304218414023, 0.77853412929705024,
   {1.2514138541078533, 1.4021120208486528, 0.12222400993688476, 0.37284537040693259, -0.083210900132281824, -0.11185287068190097, 0.15463511704185098},
   {0.68498640284283082, 1.1777023745067064, 0.14490530410594657, -0.30787575048305460, 0.33827227456298765, 1.4828547323515103, 1.3945874714984863},
   {0.68498640284283082, 1.1777023745067064, 0.14490530410594657, -0.30787575048305460, -0.33827227456298765, 1.4828547323515103, 1.5869254182024407, -0.044670466658054765, 1.2343617094508750, 0.21649817100421924, -0.044670466658054765, 1.3945874714984863},
   {0.18855532617988811, 0.49643107666294271, 1.3833120165836874, 0.59225868743169854, 0.24444801987376951, 0.74569074081386519}},
  {52.540854848449598, 16.841475579687213, 1.4716835306145224, 1.9725847222622672, 0.043992023093792354,
   {4.5924933124761988, 6.0768608174976232, 0.25899662406621095, 0.36794419646405868, -0.34271502550981263, -0.51013073560428089, 0.17525341991314367},
   {2.9433417215271153, 3.3015334905638857, 0.0073517051941042756, -0.42205574270998427, -0.19680889272018453, 1.6120734100973096, 1.7620623099503741},
   {2.9433417215271153, 3.3015334905638857, 0.0073517051941042756, -0.42205574270998427, 0.19680889272018453, 1.6120734100973096, 3.0555453900405119, -0.34238180149343389, 3.1903696775902622, -0.49509410119969359, -0.34238180149343389, 1.7620623099503741},
   {1.2606429894085655, 1.6826987321185498, 1.1014318671589920, 0.86883331197508799, 0.51799324813242190, 0.73588839292811736}},
  {7.65666361378101, 29.455337949240953, 0.84181773350104983, 1.1893832995136582, 0.090371930899744712,
   {1.9845965946183855, 2.1118299360439744, 0.24984434753673899, 0.26978525272562561, 0.0073360894743053423, -0.024205836609012640, 0.49932976339088219},
   {0.062337513232066200, 1.0835884378807454, 0.0041006719928392765, -0.0087341625318370605, 0.035248319838775462, 2.0605101251734084, 2.5479749252601618},
   {0.062337513232066200, 1.0835884378807454, 0.0041006719928392765, -0.0087341625318370605, -0.035248319838775462, 2.0605101251734084, 1.1107116865064342, 0.025826815348380883, 1.1339829984496852, 0.0024862332507414545, 0.025826815348380883, 2.5479749252601618},
   {0.026801675350114570, 0.035535837881951630, 1.5649221020927697, 1.5168389477293179, 0.49968869507347798, 0.53957050545125123}},
  {40.267818590849409, 28.764497944495055, 0.6318667200950342, 0.63084150348277501, 0.4743710651388312,
   {1.5120779480671383, 1.5102588650389280, 0.15466053167274685, 0.28039215711594239, -0.099968266376023859, -0.099602979811280488, 0.20366919860382023},
   {0.52535141562571381, 1.0466909607646394, 0.084509641536323448, -0.16884031468802846, 0.16713257773468605, 1.3914449227163041, 1.4635162542289075},
   {0.52535141562571381, 1.0466909607646394, 0.084509641536323448, -0.16884031468802846, -0.16713257773468605, 1.3914449227163041, 1.3697214335035880, -0.070476759981062176, 1.1589322366769540, 0.098907809656328093, -0.070476759981062176, 1.4635162542289075},
   {0.17825555046884268, 0.34709586515687114, 1.1666335009071338, 0.74615096694809585, 0.30932106334549371, 0.56078431423188477}},
  {1.6589050185196164, 18.624046755909013, 1.0248887657393226, 1.4035778270104473, 0.31449382491033107,
   {2.4070329977071814, 2.4547123092095478, 0.31787650435477249, 0.32878500871671109, 0.0047521705885905384, -0.0071558474356362863, 0.60591421379853236},
   {0.15965520266664135, 1.4501070093119549, 0.0049446875003064899, -0.0099129947033425106, 0.016848701520841198, 2.5837748327882807, 3.1501435857373847},
   {0.15965520266664135, 1.4501070093119549, 0.0049446875003064899, -0.0099129947033425106, -0.016848701520841198, 2.5837748327882807, 1.5298939555093526, 0.078430862136532866, 1.5319027906834478, 0.076412219112919021, 0.078430862136532866, 3.1501435857373847},
   {0.074871103981649418, 0.084784098684991928, 1.9529665115790422, 1.9212601278545520, 0.63575300870954497, 0.65757001743342219}},
  {14.519415762062756, 15.12441726945683, 0.40674912959911691, 1.4923250052239707, 0.39935750987050112,
   {1.3974341100316097, 2.7930611282852736, 0.16192784344038049, 0.38916698935832132, 0.068477996844160775, -0.24438685050997095, 0.38174794920548085},
   {0.41398613889225588, 1.2762560492468966, 0.057547762975776613, -0.18717934037012173, 0.32484671444153655, 1.9644595759520443, 2.2648150683972093},
   {0.41398613889225588, 1.2762560492468966, 0.057547762975776613, -0.18717934037012173, -0.32484671444153655, 1.9644595759520443, 1.4128058454733031, 0.10970424581206317, 1.5973162076107832, -0.088065075590515325, 0.10970424581206317, 2.2648150683972093},
   {0.11340339926106708, 0.30058273963118880, 1.6981516520470600, 1.1285778342596251, 0.32385568688076097, 0.77833397871664264}},
};

void check_rel(double got, double want, double tol = 1e-13) {
    const double scale = std::max({std::abs(want), std::abs(got), 1e-30});
    CHECK(std::abs(got - want) / scale <= tol);
}

} // namespace

TEST_CASE("golden values: frozen extended-precision table pins") {
    // the c1 golden slot order: g1_0, g1_1, g1_2, g2_0, g2_1, g2_2, g3_3
    for (const GoldenRates& g : kGolden) {
        const Tables t = eval(g.omega23, g.Omega0, g.gamma2, g.gamma3, g.gamma);
        for (int i = 0; i < 7; ++i) check_rel(t.base[i], g.base[i]);
        // golden c1 layout: [g1_0, g1_1, g1_2, g2_0, g2_1, g2_2, g3_3]
        for (int i = 0; i < 7; ++i) check_rel(t.c1[i], g.c1[i]);
        for (int i = 0; i < 12; ++i) check_rel(t.c2[i], g.c2[i]);
        for (int i = 0; i < 6; ++i) check_rel(t.em[i], g.em[i]);
    }
}

TEST_CASE("extended-precision agreement at random points") {
    std::mt19937_64 rng(991);
    auto uni = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    for (int k = 0; k < 20; ++k) {
        const double w23 = uni(-60, 60), O0 = uni(5, 30);
        const double g2 = uni(0.01, 2), g3 = uni(0.01, 2), gam = uni(0, 1);
        const Tables t = eval(w23, O0, g2, g3, gam);
        const LongTables lt = long_eval(w23, O0, g2, g3, gam);
        for (int i = 0; i < 7; ++i) check_rel(t.base[i], double(lt.base[i]), 1e-12);
        for (int i = 0; i < 7; ++i) check_rel(t.c1[i], double(lt.c1[i]), 1e-12);
        for (int i = 0; i < 12; ++i) check_rel(t.c2[i], double(lt.c2[i]), 1e-12);
        for (int i = 0; i < 6; ++i) check_rel(t.em[i], double(lt.em[i]), 1e-12);
    }
}

TEST_CASE("base rates at the angle extremes") {
    PhysicalParams p;
    p.Omega0 = 20; p.omega23 = 0;
    const double g2 = 0.7, g3 = 0.4;
    DressedParams d = derive_dressed(p);
    BaseRates b = base_rates(d, g2, g3, 0.0);
    CHECK(b.gamma_plus == doctest::Approx(g2 + g3));
    CHECK(b.gamma_minus == doctest::Approx(g2 + g3));
    CHECK(b.Gamma_plus == doctest::Approx((g2 + g3) / 8));
    CHECK(b.gamma0_plus == 0.0);
    CHECK(b.gamma0_minus == 0.0);
    CHECK(b.gamma00 == doctest::Approx((g2 + g3) / 4));

    // cos(theta) -> 0 limit, realized by omega23 >> Omega0
    d.sin_theta = 1.0;
    d.cos_theta = 0.0;
    const double gam = 0.3;
    b = base_rates(d, g2, g3, gam);
    CHECK(b.gamma_plus == doctest::Approx(4 * g2));
    CHECK(b.gamma_minus == doctest::Approx(4 * g3));
    CHECK(b.Gamma_plus == doctest::Approx(0.0));
    CHECK(b.Gamma_minus == doctest::Approx(gam));
    CHECK(b.gamma0_plus == 0.0);
    CHECK(b.gamma00 == 0.0);
}

TEST_CASE("base rates at the scaled splitting 0.5") {
    PhysicalParams p;
    p.Omega0 = 20;
    p.omega23 = 2 * p.Omega0 * 0.5;
    const DressedParams d = derive_dressed(p);
    CHECK(d.sin_theta == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    const BaseRates b = base_rates(d, 1.0, 0.1, 0.0);
    CHECK(b.gamma_plus ==
          doctest::Approx(16.0 / 9.0 + 0.1 * 4.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("case 1 table at the symmetric angle") {
    PhysicalParams p;
    p.Omega0 = 11; p.omega23 = 0;
    const double g2 = 0.8, g3 = 0.5, G = g2 + g3;
    const DressedParams d = derive_dressed(p);
    const BaseRates b = base_rates(d, g2, g3, 0.0);
    const CaseIRates r = case1_rates(b, d, g2, g3, 0.0);
    CHECK(r.g1_0 == 0.0);
    CHECK(r.g1_1 == doctest::Approx(G / 2).epsilon(1e-14));
    CHECK(r.g2_0 == 0.0);
    // 2*(gamma00 + Gamma- + Gamma+) = 2*(G/4 + G/8 + G/8) = G
    CHECK(r.g2_2 == doctest::Approx(G).epsilon(1e-14));
    CHECK(r.g3_3 == doctest::Approx(1.25 * G).epsilon(1e-14));
    CHECK(r.g1_2 == 0.0);
}

TEST_CASE("equality chains hold bit-exactly") {
    std::mt19937_64 rng(313);
    auto uni = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    for (int k = 0; k < 50; ++k) {
        PhysicalParams p;
        p.Omega0 = uni(5, 30);
        p.omega23 = uni(-60, 60);
        const double g2 = uni(0, 2), g3 = uni(0, 2), gam = uni(0, 1);
        const DressedParams d = derive_dressed(p);
        const BaseRates b = base_rates(d, g2, g3, gam);
        const CaseIRates c1 = case1_rates(b, d, g2, g3, gam);
        CHECK(c1.g4_4() == c1.g3_3);
        CHECK(c1.g5_5() == c1.g3_3);
        CHECK(c1.g6_6() == c1.g3_3);
        const CaseIIRates t = case2_rates(b, d, g2, g3, gam);
        CHECK(t.t4_4() == t.t3_3);
        CHECK(t.t4_8() == t.t3_7);
        CHECK(t.t6_6() == t.t5_5);
        CHECK(t.t6_10() == t.t5_9);
        CHECK(t.t7_7() == t.t6_6());
        CHECK(t.t7_3() == t.t6_10());
        CHECK(t.t8_8() == t.t7_7());
        CHECK(t.t8_4() == t.t7_3());
        CHECK(t.t9_9() == t.t3_3);
        CHECK(t.t10_10() == t.t3_3);
        CHECK(t.t10_6() == t.t9_5);
        CHECK(t.t12_12() == t.t11_11);
        CHECK(t.t16_16() == t.t11_11);
        // t11_11 coincides with the single-quantum g3_3
        CHECK(t.t11_11 == c1.g3_3);
        // sign flip between the two population tables
        CHECK(t.t2_1 == -c1.g2_1);
        // nonnegative diagonals
        for (double x : {c1.g1_1, c1.g2_2, c1.g3_3, t.t1_1, t.t2_2, t.t3_3,
                         t.t5_5, t.t11_11})
            CHECK(x >= 0.0);
        for (double x : {b.gamma_plus, b.gamma_minus, b.Gamma_plus,
                         b.Gamma_minus, b.gamma00})
            CHECK(x >= 0.0);
    }
}

TEST_CASE("case 2 table at the symmetric angle") {
    PhysicalParams p;
    p.Omega0 = 9; p.omega23 = 0;
    const double g2 = 1.1, g3 = 0.2, G = g2 + g3;
    const DressedParams d = derive_dressed(p);
    const BaseRates b = base_rates(d, g2, g3, 0.0);
    const CaseIIRates t = case2_rates(b, d, g2, g3, 0.0);
    CHECK(t.t1_2 == 0.0);
    CHECK(t.t3_7 == 0.0);
    // g2/8 + g3/8 + 0 + G/4 + G/8 = G/2
    CHECK(t.t3_3 == doctest::Approx(0.5 * G).epsilon(1e-14));
    CHECK(t.t5_5 == doctest::Approx(0.5 * G).epsilon(1e-14));
}

TEST_CASE("emitter rates at the symmetric angle") {
    PhysicalParams p;
    p.Omega0 = 13; p.omega23 = 0;
    const double g2 = 0.9, g3 = 0.3, G = g2 + g3;
    const DressedParams d = derive_dressed(p);
    const BaseRates b = base_rates(d, g2, g3, 0.0);
    const EmitterRates r = emitter_rates(b, d, 0.0);
    CHECK(r.g11_plus == 0.0);
    CHECK(r.g11_minus == 0.0);
    // 2*gamma00 + 2*Gamma = G/2 + G/4
    CHECK(r.g22_plus == doctest::Approx(0.75 * G).epsilon(1e-14));
    CHECK(r.g22_minus == doctest::Approx(0.75 * G).epsilon(1e-14));
    CHECK(r.g33_plus == doctest::Approx(G / 4).epsilon(1e-14));
    CHECK(r.g33_minus == doctest::Approx(G / 4).epsilon(1e-14));
}

TEST_CASE("emitter rates are plus/minus symmetric when gamma2 = gamma3, gamma = 0") {
    std::mt19937_64 rng(17);
    auto uni = [&](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    for (int k = 0; k < 20; ++k) {
        PhysicalParams p;
        p.Omega0 = uni(5, 30);
        p.omega23 = uni(-60, 60);
        const double g = uni(0.1, 2);
        const DressedParams d = derive_dressed(p);
        const BaseRates b = base_rates(d, g, g, 0.0);
        const EmitterRates r = emitter_rates(b, d, 0.0);
        CHECK(r.g11_plus == doctest::Approx(r.g11_minus).epsilon(1e-14));
        CHECK(r.g33_plus == doctest::Approx(r.g33_minus).epsilon(1e-14));
    }
}

TEST_CASE("all tables vanish when every decay is zero") {
    PhysicalParams p;
    p.Omega0 = 12;
    p.omega23 = 19;
    const DressedParams d = derive_dressed(p);
    const BaseRates b = base_rates(d, 0, 0, 0);
    const CaseIRates c1 = case1_rates(b, d, 0, 0, 0);
    const CaseIIRates c2 = case2_rates(b, d, 0, 0, 0);
    const EmitterRates em = emitter_rates(b, d, 0);
    for (double x : {b.gamma_plus, b.gamma_minus, b.Gamma_plus, b.Gamma_minus,
                     b.gamma0_plus, b.gamma0_minus, b.gamma00})
        CHECK(x == 0.0);
    for (double x : {c1.g1_0, c1.g1_1, c1.g1_2, c1.g2_0, c1.g2_1, c1.g2_2,
                     c1.g3_3})
        CHECK(x == 0.0);
    for (double x : {c2.t1_0, c2.t1_1, c2.t1_2, c2.t2_0, c2.t2_1, c2.t2_2,
                     c2.t3_3, c2.t3_7, c2.t5_5, c2.t5_9, c2.t9_5, c2.t11_11})
        CHECK(x == 0.0);
    for (double x : {em.g11_plus, em.g11_minus, em.g22_plus, em.g22_minus,
                     em.g33_plus, em.g33_minus})
        CHECK(x == 0.0);
}
