#ifndef GRSTD_TESTS_GOLDEN_TABLES_HPP
#define GRSTD_TESTS_GOLDEN_TABLES_HPP

#include <array>
#include <string>

namespace grstd::golden {

// Standard models of GR(17^n, 3^k): rows k = 0..3, columns n = 1, 2, 3 and
// the 17-adic column at precision 17^10 with balanced coefficients.
inline const std::array<std::array<std::string, 4>, 4> kSeventeenThree = {{
    {"x+10", "x+214", "x+1659", "x+907573721136"},
    {"x^3+14x+10", "x^3+286x+214", "x^3+4910x+1659", "x^3-3x+907573721136"},
    {"x^9+8x^7+10x^5+4x^3+9x+10", "x^9+280x^7+27x^5+259x^3+9x+214", "x^9+4904x^7+27x^5+4883x^3+9x+1659",
     "x^9-9x^7+27x^5-30x^3+9x+907573721136"},
    {"x^27+7x^25+x^23+x^21+8x^19+15x^17+16x^7+7x^5+3x^3+7x+10",
     "x^27+262x^25+35x^23+35x^21+280x^19+49x^17+119x^15+255x^13+187x^11+187x^9+254x^7+143x^5+241x^3+262x+214",
     "x^27+4886x^25+324x^23+2636x^21+569x^19+2072x^17+986x^15+3434x^13+4233x^11+765x^9+1410x^7+2455x^5+819x^3+"
     "4886x+1659",
     // Same constant term as the rows above.
     "x^27-27x^25+324x^23-2277x^21+10395x^19-32319x^17+69768x^15-104652x^13+107406x^11-72930x^9+30888x^7-7371x^5+"
     "819x^3-27x+907573721136"},
}};

// Standard models of GR(7^n, 5^k): rows k = 0..2, columns n = 1, 2, 3 and
// the 7-adic column at precision 7^10.
inline const std::array<std::array<std::string, 4>, 3> kSevenFive = {{
    {"x+6", "x+27", "x+223", "x+89288611"},
    {"x^5+4x^3+3x^2+2x+6", "x^5+39x^3+10x^2+23x+27", "x^5+333x^3+108x^2+121x+223",
     "x^5-10x^3-118986592x^2-70930221x+89288611"},
    {"x^25+6x^23+3x^21+6x^19+3x^18+4x^17+4x^16+5x^15+2x^14+3x^13+2x^12+2x^11+6x^9+2x^8+5x^7+4x^6+6x^5+x^4+2x^3+"
     "5x^2+2x+6",
     "x^25+48x^23+45x^21+20x^19+31x^18+18x^17+25x^16+5x^15+30x^14+17x^13+2x^12+44x^11+35x^10+13x^9+30x^8+26x^7+"
     "4x^6+41x^5+36x^4+9x^3+12x^2+44x+27",
     "x^25+293x^23+339x^21+69x^19+178x^18+214x^17+319x^16+152x^15+275x^14+311x^13+296x^12+142x^11+280x^10+258x^9+"
     "324x^8+222x^7+102x^6+237x^5+183x^4+205x^3+12x^2+289x+223",
     "x^25-50x^23+1025x^21-11250x^19-110679405x^18-27514217x^17-79903246x^16+137649825x^15+16072226x^14+"
     "132000431x^13-25843382x^12+50890709x^11-7926107x^10-125486292x^9-71853031x^8-57656706x^7+113389042x^6-"
     "40325244x^5-101821768x^4-8793629x^3+63002252x^2+38678341x+89288611"},
}};

// Standard models of GR(3^n, 3^k), k = 1, 2, 3 (the same digits for every n).
inline const std::array<std::string, 3> kThreeThree = {
    "x^3+2x^2+2x+2",
    "x^9+2x^8+x^7+x^5+x^3+2x+2",
    "x^27+2x^26+2x^24+x^23+2x^22+2x^21+2x^18+x^16+x^15+2x^14+2x^13+2x^12+x^10+2x^9+x^8+x^7+x^6+2x^5+x^3+x^2+2x+2",
};

}  // namespace grstd::golden

#endif  // GRSTD_TESTS_GOLDEN_TABLES_HPP
