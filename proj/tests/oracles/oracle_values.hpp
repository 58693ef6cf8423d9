// Generated by tests/oracles/generate_oracles.py. Do not edit.
#pragma once

namespace oracle {

struct BesselRow { double x, j0, j1, y0, y1, k0, k1; };
inline constexpr BesselRow kBessel[] = {
    {0.001, 9.99999750000015625e-1, 4.9999993750000260417e-4, -4.471416611375923269, -6.3662216723113942807e+2, 7.0236888005623813436, 9.9999623815608557428e+2},
    {0.1, 9.9750156206604003228e-1, 4.9937526036241997556e-2, -1.5342386513503668441, -6.4589510947020269877, 2.4270690247020166125, 9.8538447808706061348},
    {1, 7.6519768655796655145e-1, 4.4005058574493351596e-1, 8.8256964215676957983e-2, -7.8121282130028871655e-1, 4.2102443824070833334e-1, 6.0190723019723457474e-1},
    {2.404825557695773, -1.2011950073676857534e-16, 5.1914749728946673819e-1, 5.0992438344847905349e-1, 1.0274668243825964843e-1, 6.9814543558869258762e-2, 8.3219309602173897096e-2},
    {5, -1.7759677131433830435e-1, -3.2757913759146522204e-1, -3.0851762524903378007e-1, 1.478631433912268448e-1, 3.6910983340425942747e-3, 4.0446134454521642084e-3},
    {12.5, 1.4688405470042110231e-1, -1.6548380461475971846e-1, -1.7121430684466928735e-1, -1.5383825653750118008e-1, 1.3084036967769774253e-6, 1.3597678438215175933e-6},
    {30, -8.6367983581040211336e-2, -1.1875106261662293652e-1, -1.1729573168666402525e-1, 8.4425570661747234891e-2, 2.1324774964630563712e-14, 2.1677320018915494249e-14},
    {100, 1.9985850304223122424e-2, -7.7145352014112158033e-2, -7.7244313365083152254e-2, -2.0372312002759793305e-2, 4.6566282291759020189e-45, 4.6798537356369092866e-45},
    {600, -2.1987789172131950606e-2, 2.4014365301107028418e-2, 2.4032680101381798485e-2, 2.2007824026257975438e-2, 1.3558285309948524376e-262, 1.3569579181128060869e-262},
};

struct FreeGreenRow { double kr, re_par, im_par, re_perp, im_perp; };
inline constexpr FreeGreenRow kFreeGreen[] = {
    {0.1, -1.5994872947553255292e+2, -5.2998614993109873388e-2, 7.9182565581261161401e+1, -5.294560122892211858e-2},
    {1, -2.1991604944344549721e-1, -4.7932483957718289101e-2, 6.6962133350290946577e-2, -4.2995891371431802027e-2},
    {7.5, -2.7847673391692916319e-3, 6.2691104996450768577e-4, -2.2855312826603265354e-3, -1.0265944386567767816e-2},
};

struct CavityGreenRow { double kr, kd, re_par, im_par, re_perp, im_perp, re_00, im_00; };
inline constexpr CavityGreenRow kCavityGreen[] = {
    {1, 5, -1.9978924182218664068e-1, -6.1755867634837685122e-2, 8.8199947405574161583e-2, -5.7403885581862183258e-2, 7.733309352977948978e-2, -3.8259884327898327572e-2},
    {0.2, 2, -2.0315277235001838483e+1, 0.0, 9.7260755293508705454, 0.0, 9.7171910787687738653, -1.2375312152994704885e-1},
    {2, 20, -2.4723703210071853853e-2, -2.9673616418592263013e-2, 3.3704027393720366131e-2, -1.3810846935299407195e-2, 2.9680754041078856447e-2, -1.8924136267100906669e-2},
    {0.5, 8, -1.4198859925525228965, -3.4873877794739553003e-2, 5.7428799189195952305e-1, -3.3501154380863889823e-2, 5.6758641918643085427e-1, -5.2704011258015347645e-2},
    {3, 2.5, -1.9387763669365065954e-2, 0.0, -7.1490632530757594512e-3, 0.0, 3.7999534269968093911e-2, 2.6005195490193343762e-2},
};

struct DerivativeRow { double kr, kd, par, perp, g00; };
inline constexpr DerivativeRow kDerivative[] = {
    {0.3, 2, -6.2337787510195634169e-1, -3.4941228698593672041e-1, -1.4368497629124214617e-1},
    {2, 5, 6.708920790061504812e-2, 1.3262798643634251109e-1, 6.2567327092260768849e-2},
    {1.5, 8, -9.6412180778508173894e-2, -1.8297395678466222234e-2, 1.0066133033475996885e-1},
};

struct ImagGreenRow { double ur, ud, par, perp, g00; };
inline constexpr ImagGreenRow kImagGreen[] = {
    {0.5, 2, 1.1726349093026704233, -6.5967311534507890909e-1, -6.6295962740842262795e-1},
    {2, 10, 8.0778439644986126998e-3, -9.4227908920733913942e-3, -9.4233391024833823051e-3},
    {1, 0.5, 2.4825366063598941885e-2, -4.2042515754022847284e-3, -1.3413479305194025141e-1},
    {0.2, 1, 1.9681415804760816165e+1, -9.9485198352663566709, -9.876438902298054775},
    {3, 0.4, 6.3397332524545302921e-10, -3.6377857141554131088e-11, -1.3822409609097305434e-2},
};

// Kd = 0 marks the free-space form.
struct VOffRow { double kr, kd, v00, vpp, vpm; };
inline constexpr VOffRow kVOff[] = {
    {0.2, 0.2, 5.231047320827685, 79.59298388371762, 26.406003529789825},
    {0.2, 2, 78.7046845124796, 172.93650917663695, 18.325143840373816},
    {1, 5, 0.005217268997403299, 0.00956534762004559, 0.0007529950569028186},
    {0.2, 0, 79.17452696500506, 172.9417524941072, 18.192978232954612},
    {1, 0, 0.0053450457778813154, 0.00957170744648642, 0.000712303539934153},
};

struct VStaticRow { double r_over_d, v00, vpp, vpm; };
inline constexpr VStaticRow kVStatic[] = {
    {0.01, 2.5330174148269287525e+4, -3.7995443858491325228e+4, -1.2665193613206188264e+4},
    {0.1, 2.5211597371788437637e+1, -3.7994723673544918165e+1, -1.2709371045239081954e+1},
    {0.5, 1.3395440945651570443e-1, -2.9353937744148689676e-1, -1.2264764444286082158e-1},
    {1, 3.6859441685418360026e-3, -2.5729084425132753507e-2, -1.4901329097793545053e-2},
    {2, 4.8848703872407989879e-6, -6.1538680246494076846e-4, -4.5830058587410910084e-4},
    {5, 2.0233922624321078031e-14, -2.6749737877414133201e-8, -2.3644796726601980666e-8},
};

}  // namespace oracle
