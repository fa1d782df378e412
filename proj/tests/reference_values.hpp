#pragma once

// Generated by tests/oracles/make_reference.py with mpmath at 30 digits.

#include <complex>

namespace reference {

struct SpecfunReference {
  const char* function;
  int order;
  std::complex<double> z;
  std::complex<double> value;
};

inline const SpecfunReference kSpecfunReference[] = {
    {"e1", 0, {0.5, 0.0}, {0.55977359477616081175, 0.0}},
    {"e1", 0, {2.0, 3.0}, {-0.024826207944199362925, 0.020316674911044622667}},
    {"e1", 0, {-3.0, 0.5}, {-9.3836035093309434316, 0.12921297008462977011}},
    {"e1", 0, {10.0, -7.0}, {0.00000097349078319826304136, 0.0000033522057072729500874}},
    {"e1", 0, {0.010000000000000000208, 0.020000000000000000416}, {3.2333099544943701135, -1.0872488264115450535}},
    {"gamma_neg", 1, {0.2999999999999999889, 0.4000000000000000222}, {-0.070248620158392125903, -0.85337758257538226313}},
    {"gamma_neg", 1, {0.0, -1.5}, {-0.19464034054063640062, -0.19895466117764166547}},
    {"gamma_neg", 1, {4.0, 2.0}, {-0.0006334730158529827165, -0.00021831082418439323781}},
    {"gamma_neg", 1, {0.0020000000000000000416, -0.0010000000000000000208}, {393.47317959210864534, 199.53685205781858418}},
    {"gamma_neg", 2, {0.2999999999999999889, 0.4000000000000000222}, {-0.90088274990591669744, -0.72184824687613365185}},
    {"gamma_neg", 2, {0.0, -1.5}, {0.081600792121939775846, -0.1221882219898579297}},
    {"gamma_neg", 2, {4.0, 2.0}, {-0.00013068068606069442126, 0.000011779866067011895373}},
    {"gamma_neg", 2, {0.0020000000000000000416, -0.0010000000000000000208}, {59603.513243599768179, 79800.231657221133196}},
    {"gamma_neg", 3, {0.2999999999999999889, 0.4000000000000000222}, {-1.6736175720608643641, 0.32019398241177175419}},
    {"gamma_neg", 3, {0.0, -1.5}, {0.071317759327655080243, 0.033743017041784454582}},
    {"gamma_neg", 3, {4.0, 2.0}, {-0.00002258710024640561175, 0.000012917784773450457039}},
    {"gamma_neg", 3, {0.0020000000000000000416, -0.0010000000000000000208}, {5273532.106724346969, 29253433.25610038001}},
    {"gamma_neg", 4, {0.2999999999999999889, 0.4000000000000000222}, {-1.2626227666676640559, 2.3602658009402154811}},
    {"gamma_neg", 4, {0.0, -1.5}, {-0.014336244687829675735, 0.04082325742370472245}},
    {"gamma_neg", 4, {4.0, 2.0}, {-0.0000030119937687100782258, 0.0000042582644960033304775}},
    {"gamma_neg", 4, {0.0020000000000000000416, -0.0010000000000000000208}, {-2805303399.682935019, 9570706633.3526428556}},
    {"gamma_neg", 5, {0.2999999999999999889, 0.4000000000000000222}, {1.7623407796132108133, 4.0223633288874754079}},
    {"gamma_neg", 5, {0.0, -1.5}, {-0.023404223960647844104, -0.0063016140745627608499}},
    {"gamma_neg", 5, {4.0, 2.0}, {-0.00000018398740395854576199, 0.0000010390823175228035555}},
    {"gamma_neg", 5, {0.0020000000000000000416, -0.0010000000000000000208}, {-2429197343316.7314928, 2614414653341.662532}},
    {"erf", 0, {0.5, 0.5}, {0.64261291485482052832, 0.45788139443519221584}},
    {"erf", 0, {-1.1999999999999999556, 2.0}, {1.7418668950807350945, -1.6620888167710666544}},
    {"erf", 0, {3.0, -0.4000000000000000222}, {1.0000209474856978103, -0.000014972411116493780502}},
    {"erf", 0, {0.10000000000000000555, 4.0}, {896390.58842697168373, 918683.22696144982683}},
    {"macdonald", 0, {0.2999999999999999889, 0.0}, {1.2680623707339134008, 1.5356517170406375135}},
    {"macdonald", 0, {2.0, 0.0}, {-0.80169623188369421543, 0.35168681347830044589}},
    {"macdonald", 0, {17.5, 0.0}, {0.25197331196366059561, -0.16196543479197886132}},
    {"macdonald", 0, {-4.0, 0.0}, {0.02661045110500194541, 0.6238414625214230538}},
    {"macdonald", 1, {0.2999999999999999889, 0.0}, {-0.23297865179635890517, 3.6020011283352046292}},
    {"macdonald", 1, {2.0, 0.0}, {-0.90591720959598961778, 0.16812615031243093523}},
    {"macdonald", 1, {17.5, 0.0}, {0.25669948769891011716, -0.15483779017359920035}},
    {"macdonald", 1, {-4.0, 0.0}, {0.1037406170687014427, 0.62506024448034190349}},
};

struct AngularReference {
  double k;
  double kB;
  bool b1_field;
  bool b2_field;
  std::complex<double> value;
};

inline const AngularReference kAngularReference[] = {
    {1, 0.25, false, false, {14.274437230544691673, 0.0}},
    {1, 0.25, false, true, {12.003385671121714096, 5.5683279968317078453}},
    {1, 0.25, true, false, {12.003385671121714096, -5.5683279968317078453}},
    {1, 0.25, true, true, {12.635005759054484004, 0.0}},
    {2, 0.6, false, false, {83.01588831429456091, 0.0}},
    {2, 0.6, false, true, {41.013073558525317033, 32.073569261750636002}},
    {2, 0.6, true, false, {41.013073558525317033, -32.073569261750636002}},
    {2, 0.6, true, true, {41.945609867201282109, 0.0}},
};

struct IntegralReference {
  double k;
  double kB;
  int lambda1;
  int lambda2;
  bool b1_field;
  bool b2_field;
  std::complex<double> norm;
  std::complex<double> derivative;
};

inline const IntegralReference kIntegralReference[] = {
    {1.0, 0.25, 1, 1, false, false, {4.9733553427364346165, 8.0747506619879818574e-39}, {-6.6722638086531184829, 5.2817804802704770734}},
    {1.0, 0.25, 1, -3, false, false, {4.8191427739694133881, 1.6449340668482264365}, {-7.9470877104604939712, 1.4264662610949463629}},
    {1.0, 0.25, -3, 1, false, false, {4.8191427739694133881, -1.6449340668482264365}, {-4.6572195767640410983, 7.5949690117757954996}},
    {1.0, 0.25, -3, -3, false, false, {5.2817804802704770734, -1.0727076409684092177e-38}, {-7.4124841387348203794, 4.3565050676683497028}},
    {1.0, 0.25, 1, 1, false, true, {5.4597272696150457358, -7.0840459585234118439}, {-4.6920331762112175561, 13.111520148855244638}},
    {1.0, 0.25, 1, -3, false, true, {9.1135680055097579399, -2.0077272397535034861}, {-14.904517663863744686, 2.6425403477694112931}},
    {1.0, 0.25, -3, 1, false, true, {2.9176131295588755765, -9.068283463862659387}, {0.44276000116590816354, 14.802030048115336665}},
    {1.0, 0.25, -3, -3, false, true, {8.4786372577437585999, -5.4690896892146353915}, {-13.784860160280609679, 8.6978412043432468555}},
    {1.0, 0.25, 1, 1, true, false, {5.4597272696150457358, 7.0840459585234118439}, {-16.425945822087748594, -3.4915417002150479197}},
    {1.0, 0.25, 1, -3, true, false, {2.9176131295588755765, 9.068283463862659387}, {-12.790383958597609826, -10.902406201849566005}},
    {1.0, 0.25, -3, 1, true, false, {9.1135680055097579399, 2.0077272397535034861}, {-16.069702343341644462, 8.6438324201325120927}},
    {1.0, 0.25, -3, -3, true, false, {8.4786372577437585999, 5.4690896892146353915}, {-18.664963569828322951, -0.27104795038049329901}},
    {1.0, 0.25, 1, 1, true, true, {20.356059077246802151, -2.370040147517981977e-38}, {-27.799385729735026776, 12.64543063889574073}},
    {1.0, 0.25, 1, -3, true, true, {17.888657976974462497, 13.159472534785811492}, {-28.457359356474317351, -18.197083114508504953}},
    {1.0, 0.25, -3, 1, true, true, {17.888657976974462497, -13.159472534785811492}, {-15.297886821688505859, 31.150938890938288141}},
    {1.0, 0.25, -3, -3, true, true, {25.290861277791481461, -1.8855546908875880938e-38}, {-39.642911011042257119, 5.2432273380787217663}},
    {0.5, 0.1, 1, 1, false, false, {20.356059077246802151, -2.370040147517981977e-38}, {-27.799385729735026776, 12.64543063889574073}},
    {0.5, 0.1, 1, -3, false, false, {17.888657976974462497, 13.159472534785811492}, {-28.457359356474317351, -18.197083114508504953}},
    {0.5, 0.1, -3, 1, false, false, {17.888657976974462497, -13.159472534785811492}, {-15.297886821688505859, 31.150938890938288141}},
    {0.5, 0.1, -3, -3, false, false, {25.290861277791481461, -1.8855546908875880938e-38}, {-39.642911011042257119, 5.2432273380787217663}},
    {0.5, 0.1, 1, 1, false, true, {30.155867605796290509, -15.086867210783518363}, {-37.721232917595068553, 34.571603178031983052}},
    {0.5, 0.1, 1, -3, false, true, {34.117525660212931308, 21.290294589411274507}, {-54.255585775268009745, -47.323312329615534561}},
    {0.5, 0.1, -3, 1, false, true, {17.242181892440675508, -34.042847019043141874}, {-7.5173119382305456186, 58.24933878746191066}},
    {0.5, 0.1, -3, -3, false, true, {47.545567148621393198, -4.8414783984914776107}, {-85.52362772727007664, 0.48986671506473236158}},
    {0.5, 0.1, 1, 1, true, false, {30.155867605796290509, 15.086867210783518363}, {-52.661043958079134478, 0.08978178731067963084}},
    {0.5, 0.1, 1, -3, true, false, {17.242181892440675508, 34.042847019043141874}, {-33.316430917536433138, -49.723938713862185384}},
    {0.5, 0.1, -3, 1, true, false, {34.117525660212931308, -21.290294589411274507}, {-32.917874195953113173, 58.812296536727432948}},
    {0.5, 0.1, -3, -3, true, false, {47.545567148621393198, 4.8414783984914776107}, {-80.785858630491504467, 5.9365143617154898378}},
    {0.5, 0.1, 1, 1, true, true, {59.59078274577487451, 3.9561364118814386582e-38}, {-84.531333990811643421, 29.300388065734035435}},
    {0.5, 0.1, 1, -3, true, true, {40.552194009105584233, 60.923483957341726633}, {-57.115766210007864068, -113.48902745928563636}},
    {0.5, 0.1, -3, 1, true, true, {40.552194009105584233, -60.923483957341726633}, {-20.561675835602829441, 114.97403738074583851}},
    {0.5, 0.1, -3, -3, true, true, {97.667960219113455065, 1.2057943485597807308e-37}, {-175.91655992682423675, -4.969071660270685796}},
    {2.0, 0.75, 1, 1, false, false, {1.236110121523154534, -2.9274561932093128973e-39}, {-1.6507170381769897325, 2.5107733852380643752}},
    {2.0, 0.75, 1, -3, false, false, {1.2264718359752157073, 0.20561675835602830456}, {-2.0388186695739931574, 2.0288591078411230364}},
    {2.0, 0.75, -3, 1, false, false, {1.2264718359752157073, -0.20561675835602830456}, {-1.2163516361498799392, 2.7999219516762291785}},
    {2.0, 0.75, -3, -3, false, false, {1.2553866926190321876, -6.1670426464395901993e-39}, {-1.6969808088070961011, 2.3951139586627984539}},
    {2.0, 0.75, 1, 1, false, true, {-2.268692122819166412, -2.5345112514721484822}, {4.812178749415575191, 3.2513606917056358462}},
    {2.0, 0.75, 1, -3, false, true, {0.1516656576156246166, -3.5310052233370224319}, {-0.89731498445100003611, 6.2815748129404833807}},
    {2.0, 0.75, -3, 1, false, true, {-2.8178199558333626351, -2.126033942627024737}, {5.5392503265689566634, 2.2897517843823210302}},
    {2.0, 0.75, -3, -3, false, true, {-0.57653933410097651543, -3.6324601253043955115}, {0.43893945830483106703, 6.5459900199115936568}},
    {2.0, 0.75, 1, 1, true, false, {-2.268692122819166412, 2.5345112514721484822}, {-2.1615146427804170455, -9.1469374471315580124}},
    {2.0, 0.75, 1, -3, true, false, {-2.8178199558333626351, 2.126033942627024737}, {0.096682417298270614635, -9.3790709636413288453}},
    {2.0, 0.75, -3, 1, true, false, {0.1516656576156246166, 3.5310052233370224319}, {-8.3225144630591898477, -5.4099484824698083397}},
    {2.0, 0.75, -3, -3, true, false, {-0.57653933410097651543, 3.6324601253043955115}, {-6.7299650644092946188, -7.315799010030016537}},
    {2.0, 0.75, 1, 1, true, true, {20.356059077246802151, -2.370040147517981977e-38}, {-27.799385729735026776, 12.64543063889574073}},
    {2.0, 0.75, 1, -3, true, true, {17.888657976974462497, 13.159472534785811492}, {-28.457359356474317351, -18.197083114508504953}},
    {2.0, 0.75, -3, 1, true, true, {17.888657976974462497, -13.159472534785811492}, {-15.297886821688505859, 31.150938890938288141}},
    {2.0, 0.75, -3, -3, true, true, {25.290861277791481461, -1.8855546908875880938e-38}, {-39.642911011042257119, 5.2432273380787217663}},
};

struct NormReference {
  double k;
  double kB;
  double theta;
  double kJ;
  double value;
};

inline const NormReference kNormReference[] = {
    {1, 0.25, 0.78539816339744830962, 1, 13.476866751484483104},
    {2, 0.6, 1.0, 0.5, 13.589311572519077373},
};

}  // namespace reference
