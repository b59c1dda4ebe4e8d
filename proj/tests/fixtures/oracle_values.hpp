// Generated by tools/gen_oracles.py (mpmath 1.3.0). Do not edit by hand.
#pragma once

#include <array>

namespace fracpoisson::oracle {

inline constexpr double kMlHalfNeg_0p25 = 7.7034654773099674392e-1;
inline constexpr double kMlHalfNeg_1 = 4.2758357615580700441e-1;
inline constexpr double kMlHalfNeg_4 = 1.3699945762506138989e-1;
inline constexpr double kMlHalfNeg_10 = 5.6140992743822585858e-2;
inline constexpr double kE12At1 = 1.7182818284590452354;
inline constexpr double kMl3Half_2p5_4_m1 = 7.9226968941326750492e-2;
inline constexpr double kWrightMhalf0M1 = 2.1969564473386119852e-1;
inline constexpr double kWrightMhalf0M1Series = 2.1969564473386119852e-1;
inline constexpr double kWright121 = 1.5906368546373290634;
inline constexpr double kLevyAt0p1 = 7.3224912809632439631e-1;
inline constexpr double kFHalf_1_1 = 4.3939128946772239705e-1;
inline constexpr double kFHalf_4_2 = 2.1969564473386119852e-1;
inline constexpr std::array<double, 5> kMlTableAlpha = {0.25, 0.5, 0.75, 0.9, 0.999};
inline constexpr std::array<double, 6> kMlTableX = {0.5, 2.0, 5.0, 10.0, 20.0, 50.0};
inline constexpr std::array<double, 30> kMlTable = {6.376705192003798186e-1, 2.9810179369364406572e-1, 1.4279894642586015728e-1, 7.6237035239708097738e-2, 3.9426390446639526521e-2, 1.6097508838785519499e-2, 6.1569034419292587487e-1, 2.5539567631050574387e-1, 1.1070463773306862637e-1, 5.6140992743822585858e-2, 2.8174348741051319319e-2, 1.12815362653237725e-2, 6.0379034509524675559e-1, 2.0207848341295445435e-1, 6.7923974332643942122e-2, 3.0643250976059637773e-2, 1.4527522154459504195e-2, 5.6311878629451302351e-3, 6.03405498695860968e-1, 1.6352830001693004278e-1, 3.4431324804098418323e-2, 1.2820606051102099938e-2, 5.7495078161091125836e-3, 2.1753530768569760498e-3, 6.0648529133691131554e-1, 1.3562392299454344312e-1, 7.0439569266840408611e-3, 1.7584834590871162024e-4, 5.597906803527708741e-5, 2.086297246384059378e-5};
inline constexpr double kE2_0p4_1p9_m1 = 5.5856006553736479058e-1;
inline constexpr double kE2_0p4_1p9_m9_Laplace = 1.1340320190609597545e-1;
inline constexpr double kE3_0p5_2_3_m6 = 2.4144468662244270556e-3;
inline constexpr double kE3_0p5_2_3_m6_Laplace = 2.4144468662244270556e-3;
inline constexpr double kMlMedian_0p7_2 = 2.314434504559783644e-1;
inline constexpr double kCov4_0p75_1_2 = 4.1699088059275974568e-1;
inline constexpr double kCov4_0p5_0p3_1p7 = 2.7249982749131918575e-1;
inline constexpr double kMixedU_1 = 1.1171201310747295529;
inline constexpr double kMixedU_2p5 = 2.1027421716965170436;
inline constexpr double kMixedU_1_Laplace = 1.1171201310747295529;
inline constexpr double kMixedSecondMoment_1 = 1.6134495297000881532;
inline constexpr double kMixedCov_1_1 = 3.6549214244766721649e-1;
inline constexpr double kMixedCov_1_2 = 4.9513344378721492183e-1;
inline constexpr std::array<double, 3> kMixedDensityT1 = {3.7199874255334511182e-1, 5.3036436292068625555e-1, 2.9721245431423604375e-1};
inline constexpr std::array<double, 11> kMfppPmfT1 = {3.9018132402822939163e-1, 3.0277933992344066503e-1, 1.7637649756816571724e-1, 8.2624009596959485482e-2, 3.2498083870610127912e-2, 1.1050509533938668326e-2, 3.317341108209194472e-3, 8.9314231681670439508e-4, 2.1831769847142915895e-4, 4.8926046273617497242e-5, 1.0133068308070287778e-5};
inline constexpr std::array<double, 4> kMfppP0Matrix = {5.4175197963248276628e-1, 2.6241013475400234243e-1, 3.3689452388545780572e-1, 3.9018132402822939163e-1};
inline constexpr std::array<double, 6> kFppPmfHalfT1 = {4.2758357615580700441e-1, 2.7321201478389856507e-1, 1.5437156137190843934e-1, 7.9226968941326750492e-2, 3.7572296215290844422e-2, 1.6661869090414362428e-2};
inline constexpr std::array<double, 7> kFppPmfHalfT25 = {1.1070463773306862637e-1, 1.0666394882413155097e-1, 1.01017222723426885e-1, 9.4112101678411099494e-2, 7.7980886157137806628e-2, 3.8195727724231799266e-2, 3.8515260714425626511e-3};

}  // namespace fracpoisson::oracle
