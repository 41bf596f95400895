#pragma once

// Generated by tools/gen_oracles.py (mpmath). Do not edit by hand.

namespace zlab::oracle {

inline constexpr double kTheta[][2] = {
    {1.0000000000000000000, -1.7675479528122903883},
    {5.0000000000000000000, -3.4596203753634625332},
    {17.845599540500000000, 4.6519465726649693540e-11},
    {100.00000000000000000, 87.972165231787219625},
    {1000.0000000000000000, 2034.5464280380316087},
    {12345.678000000000000, 40636.543815330354456},
    {100000.00000000000000, 433752.02722917078144},
};
inline constexpr double kThetaDeriv[][2] = {
    {17.845599540500000000, 0.52187448965211497879},
    {100.00000000000000000, 1.3836444764195793532},
    {1000.0000000000000000, 2.5349390854530588051},
    {12345.678000000000000, 3.7915921273045557239},
    {100000.00000000000000, 4.8375241992783581349},
};
inline constexpr double kHardyZ[][2] = {
    {3.0000000000000000000, -0.53854713854170720394},
    {10.000000000000000000, -1.5491945461810223891},
    {14.000000000000000000, -0.10562626777988261014},
    {50.500000000000000000, -1.1428921840238018688},
    {100.00000000000000000, 2.6926970566644634750},
    {1000.2500000000000000, 2.0410330006959686075},
    {1484.0000000000000000, 0.43737362529442477740},
    {1486.0000000000000000, 1.6427860299480933097},
    {5000.5000000000000000, 0.58542531924643895021},
    {10000.000000000000000, -0.34139472423120855918},
    {23456.789000000000000, -0.34110187365819850645},
    {50000.125000000000000, 2.7059235329137536090},
    {99999.500000000000000, -2.6588776368730593661},
};
inline constexpr double kZeta[][4] = {
    {0.50000000000000000000, 0.0, -1.4603545088095868129, 0.0},
    {2.0000000000000000000, 0.0, 1.6449340668482264365, 0.0},
    {1.5000000000000000000, 10.000000000000000000, 1.2783911664347597336, -0.095724055986708853902},
    {0.75000000000000000000, 30.000000000000000000, 0.20089929565569283570, -0.53664728987990205758},
    {3.0000000000000000000, 100.00000000000000000, 1.0957985734149972798, -0.028464249779226951161},
    {1.0000000000000000000, 1000.0000000000000000, 0.94093686829275331080, 0.045226652072095099089},
    {0.60000000000000000000, 5000.0000000000000000, 0.49645693439935771745, -0.40811320939674612300},
    {2.0000000000000000000, 20000.000000000000000, 0.99353107030292003837, -0.15901549883438153958},
    {1.0000000000000000000, -7.5000000000000000000, 1.1102282798294151096, -0.29462495053370332774},
};
inline constexpr double kGram[][2] = {
    {0, 17.845599540410860817},
    {1, 23.170282701246309279},
    {2, 27.670182217816337961},
    {10, 54.675237446853256266},
    {1000, 1421.2563890327501587},
    {100000, 74921.895130070669309},
};
inline constexpr double kFirstZeros[][1] = {
    {14.134725141734693790},
    {21.022039638771554993},
    {25.010857580145688763},
    {30.424876125859513210},
    {32.935061587739189691},
    {37.586178158825671257},
    {40.918719012147495187},
    {43.327073280914999519},
    {48.005150881167159728},
    {49.773832477672302182},
};
inline constexpr double kS[][2] = {
    {20.000000000000000000, -0.37780035138809574752},
    {50.000000000000000000, 0.57708557793930145368},
    {100.00000000000000000, -0.0024099022718167798261},
};
inline constexpr double kS1[][2] = {
    {20.000000000000000000, -0.82538575383338597944},
    {50.000000000000000000, -1.1987635660186174893},
    {100.00000000000000000, -0.52401938816560839829},
};
inline constexpr double kSecondMoment0To100 = 295.63509905471913037;
inline constexpr double kGramSumTerms1000 = 868;
inline constexpr double kGramSumFirstNu1000 = 648;
inline constexpr double kPairSum1000 = 33308.307594843016955;
inline constexpr double kFourthSum1000 = 352125.00661799641868;

}  // namespace zlab::oracle
