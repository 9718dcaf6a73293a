#pragma once

#include <string_view>

namespace clausum {

// Canonical record table for the 3F2[1,1,c; 2,c+1; 1] summation database.
// Format: id | c | status | right-hand side (expression mini-language).
// data/theorems.txt holds the same table for external tooling; a test keeps
// the two copies in sync.
inline constexpr std::string_view kTheoremTableText =
    R"TBL(# 3F2[1,1,c; 2,c+1; 1] summation database
# id | c | status | rhs
4.1 | -1/2 | new | 2/3 - (2/3)*ln(2)
4.2 | 7/2 | new | (7/5)*(46/15 - 2*ln(2))
4.3 | -4/3 | new | (4/7)*(15/4 + pi*sqrt(3)/6 - (3/2)*ln(3))
4.4 | 4/3 | new | 12 - 2*pi/sqrt(3) - 6*ln(3)
4.5 | 10/3 | new | (10/7)*(117/28 - sqrt(3)*pi/6 - (3/2)*ln(3))
4.6 | 6/5 | new | 6*(5 - ln(10) - ((1 + sqrt(5))/sqrt(10 - 2*sqrt(5)))*pi/2 + (1/2)*(sqrt(5)*ln((sqrt(5) - 1)/2) - ln(sqrt(5)/4)))
4.7 | 7/5 | new | (7/2)*(5/2 - ln(10) - ((sqrt(5) - 1)/sqrt(10 + 2*sqrt(5)))*pi/2 + (1/2)*(sqrt(5)*ln((sqrt(5) + 1)/2) - ln(sqrt(5)/4)))
4.8 | 8/5 | new | (8/3)*(5/3 - ln(10) + ((sqrt(5) - 1)/sqrt(10 + 2*sqrt(5)))*pi/2 + (1/2)*(sqrt(5)*ln((sqrt(5) + 1)/2) - ln(sqrt(5)/4)))
4.9 | 9/5 | new | (9/4)*(5/4 - ln(10) + ((sqrt(5) + 1)/sqrt(10 - 2*sqrt(5)))*pi/2 + (1/2)*(sqrt(5)*ln((sqrt(5) - 1)/2) - ln(sqrt(5)/4)))
4.10 | 1/6 | new | sqrt(3)*pi/10 + (3/10)*ln(3) + (2/5)*ln(2)
4.11 | 7/6 | new | 7*(6 - ln(12) - sqrt(3)*pi/2 - ln(sqrt(3)))
4.12 | 11/6 | new | (11/5)*(6/5 - ln(12) + sqrt(3)*pi/2 - ln(sqrt(3)))
4.13 | 11/10 | new | 11*(10 - ln(20) - (sqrt(10 + 2*sqrt(5))/(sqrt(5) - 1))*pi/2 + (1/2)*(sqrt(5)*ln(sqrt(5) - 2) - ln(sqrt(5))))
4.14 | 13/10 | new | (13/3)*(10/3 - ln(20) - (sqrt(10 - 2*sqrt(5))/(sqrt(5) + 1))*pi/2 + (1/2)*(sqrt(5)*ln(sqrt(5) + 2) - ln(sqrt(5))))
4.15 | 17/10 | new | (17/7)*(10/7 - ln(20) + (sqrt(10 - 2*sqrt(5))/(sqrt(5) + 1))*pi/2 + (1/2)*(sqrt(5)*ln(sqrt(5) + 2) - ln(sqrt(5))))
4.16 | 19/10 | new | (19/9)*(10/9 - ln(20) + (sqrt(10 + 2*sqrt(5))/(sqrt(5) - 1))*pi/2 + (1/2)*(sqrt(5)*ln(sqrt(5) - 2) - ln(sqrt(5))))
4.17 | 13/12 | new | 13*(12 - ln(24) - (2 + sqrt(3))*pi/2 + sqrt(3)*ln(2 - sqrt(3)) - ln(sqrt(3)))
4.18 | 17/12 | new | (17/5)*(12/5 - ln(24) - (2 - sqrt(3))*pi/2 + sqrt(3)*ln(2 + sqrt(3)) - ln(sqrt(3)))
4.19 | 19/12 | new | (19/7)*(12/7 - ln(24) + (2 - sqrt(3))*pi/2 + sqrt(3)*ln(2 + sqrt(3)) - ln(sqrt(3)))
4.20 | 23/12 | new | (23/11)*(12/11 - ln(24) + (2 + sqrt(3))*pi/2 + sqrt(3)*ln(2 - sqrt(3)) - ln(sqrt(3)))
5.1 | 13/8 | erroneous | (13/50)*(16 - 5*(sqrt(2) - 1)*pi - 40*ln(2) + 10*sqrt(2)*ln(1 + sqrt(2)))
5.2 | 15/8 | erroneous | (15/196)*(32 + 7*(1 + sqrt(2))*pi - 112*ln(2) - 28*sqrt(2)*ln(1 + sqrt(2)))
5.3 | 5/3 | erroneous | (5*sqrt(3)/12)*(3*sqrt(3)*(1 - ln(3)) - pi)
5.4 | 13/8 | corrected | (13/50)*(16 + 5*(sqrt(2) - 1)*pi - 40*ln(2) + 10*sqrt(2)*ln(1 + sqrt(2)))
5.5 | 15/8 | corrected | (15/196)*(32 + 14*(1 + sqrt(2))*pi - 112*ln(2) - 28*sqrt(2)*ln(1 + sqrt(2)))
5.6 | 5/3 | corrected | (5*sqrt(3)/12)*(3*sqrt(3)*(1 - ln(3)) + pi)
)TBL";

}  // namespace clausum
