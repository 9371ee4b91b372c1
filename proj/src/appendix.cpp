#include <map>
#include <string>

#include "ptri/identities.hpp"

namespace ptri {

const std::map<std::string, std::string>& appendix_sources() {
    // Transcribed term by term from the printed appendix; spacing kept.
    static const std::map<std::string, std::string> sources = {
        {"F4",
         "a_1+b+b^2+a_1 b^2+b^3+b^4+a_1 b^4+b^5+b^6+a_1 b^6+b^7+b^8 +(a_1^3 +a_1^2 b+a_1^3 b^4 "
         "+a_1^2 b^5)k+(a_1^4+a_1^5+a_1^4 b+a_1^4 b^2+a_1^5 b^2+a_1^4 b^3)k^2 +(a_1^7 +a_1^6 "
         "b)k^3+a_1^8 k^4"},
        {"F3",
         "1+a_1^2+a_1^3+a_1^4+b+a_1 b+a_1^4 b+b^2+a_1 b^2+a_1^3 b^2+b^3+b^4+a_1^2b^4 +b^5+a_1 "
         "b^5+b^6+a_1 b^6+b^7+(a_1^2 +a_1^4 +a_1^5 +a_1^2 b +a_1^4 b^2 +a_1^2 b^4+a_1^2b^5)k "
         "+(a_1^4 +a_1^4 b +a_1^5 b +a_1^4 b^2 +a_1^5 b^2 +a_1^4 b^3)k^2+(a_1^6 +a_1^6 b)k^3"},
        {"F2",
         "b+a_1 b+a_1^3 b+a_1^4 b+b^2+a_1 b^2+a_1^3 b^2+a_1^4 b^2+b^3+a_1^2 b^3+a_1^3b^3+b^4 "
         "+a_1^2 b^4+a_1^3 b^4+b^5+a_1 b^5+a_1^2 b^5+b^6+a_1 b^6+a_1^2 b^6+b^7+b^8 +(a_1^3 +a_1^4 "
         "+a_1^3b +a_1^3 b^2 +a_1^5 b^2 +a_1^3 b^3 +a_1^4 b^3)k +(a_1^4 +a_1^4 b +a_1^4 b^2 +a_1^6 "
         "b^2+a_1^4 b^3)k^2+a_1^7 k^3+a_1^8 k^4"},
        {"F1",
         "a_1+a_1^2+a_1^3+a_1^4+b+a_1 b+a_1^3 b+a_1^4 b+a_1 b^2+a_1^2 b^2+b^3 +a_1^2 b^3+a_1^3 "
         "b^3+a_1 b^4+a_1^3 b^4+b^5+a_1 b^5+a_1^2 b^5+a_1 b^6+b^7 +(1+a_1^3 +a_1^4 +a_1^5 +b +a_1b "
         "+a_1^3 b +a_1^4 b +b^2 +a_1 b^2 +a_1^4 b^2 +b^3 +a_1^3 b^3 +a_1^4 b^3 +b^4 +a_1^3 b^4 "
         "+b^5 +a_1 b^5 +b^6 +a_1 b^6 +b^7)k +(a_1^2 +a_1^4 +a_1^2 b +a_1^4 b +a_1^4 b^2 +a_1^4 "
         "b^3 +a_1^2 b^4 +a_1^2 b^5)k^2 +(a_1^4 +a_1^6 +a_1^4 b +a_1^5 b +a_1^4 b^2 +a_1^5 b^2 "
         "+a_1^4 b^3)k^3+(a_1^6 +a_1^6 b)k^4"},
        {"F0",
         "b+a_1^4 b+b^2+a_1^4 b^2+b^5+b^6+(a_1 +a_1^2 +a_1^3 +a_1^4 +b +a_1b +a_1^3 b +a_1^4 b "
         "+a_1^2 b^2 +a_1^5 b^2 +b^3 +a_1^2 b^3 +a_1^3 b^3 +a_1 b^4 +a_1^3 b^4 +b^5 +a_1b^5 +a_1^2 "
         "b^5 +b^7)k +(a_1 +a_1^2 +a_1^4 +a_1^5 +b +a_1^3 b +a_1^4 b +a_1^5b +b^2 +a_1 b^2 +a_1^3 "
         "b^2 +a_1^4 b^2 +a_1^6 b^2 +b^3 +a_1^3 b^3 +a_1^4 b^3 +b^4 +a_1 b^4 +a_1^2 b^4 +a_1^3 b^4 "
         "+b^5 +b^6 +a_1 b^6 +b^7 +b^8)k^2 +(a_1^3 +a_1^5 +a_1^2 b +a_1^4 b +a_1^5 b^2 +a_1^4 b^3 "
         "+a_1^3 b^4 +a_1^2 b^5)k^3 +(a_1^4 +a_1^5 +a_1^6+a_1^4 b +a_1^4 b^2 +a_1^5 b^2 +a_1^4 b^3 "
         ")k^4+(a_1^7 +a_1^6 b )k^5+a_1^8 k^6"},
        {"h1",
         "1+a_1^4+a_1^2 b+a_1^4 b^2+a_1^2 b^5+b^8+(a_1^2 +a_1^6 +a_1^2 b^2 +a_1^2b^4 +a_1^2 b^6 )k "
         "+(a_1^4 +a_1^6 b +a_1^4 b^4 )k^2+(a_1^6 +a_1^6 b^2 )k^3"},
        {"h2",
         "a_1^2+a_1^6+b+a_1^4 b+a_1^2 b^2+a_1^6 b^2+b^3+a_1^4 b^3+a_1^2 b^4+a_1^4b^5+a_1^2 "
         "b^6+a_1^4 b^7+b^9 +b^{11}+(a_1^4 +a_1^8 +a_1^4 b^4 )k+(a_1^2 +a_1^6 +a_1^4 b +a_1^8 b "
         "+a_1^6 b^4+a_1^4 b^5 +a_1^2 b^8 )k^2 +(a_1^4 +a_1^8 +a_1^4 b^2 +a_1^8 b^2 +a_1^4 b^4 "
         "+a_1^4 b^6 )k^3+(a_1^6 +a_1^8 b^3 +a_1^6 b^4 )k^4+(a_1^8 +a_1^8 b^2 )k^5"},
        {"d1",
         "a_1^2+a_1^6+a_1^{10}+a_1^{14}+b+a_1^4 b+a_1^8 b+a_1^{12} b+a_1^4 b^3+a_1^{12} b^3+a_1^2 "
         "b^4+a_1^{10} b^4+b^5+a_1^8 b^5 +a_1^6 b^6+a_1^8 b^7+a_1^6 b^8+a_1^8 b^{11}+a_1^6 "
         "b^{14}+a_1^2 b^{16}+b^{17}+a_1^4b^{17}+a_1^4 b^{19}+a_1^2 b^{20}+b^{21} +(a_1^2 b +a_1^6 "
         "b +a_1^{10} b +a_1^{14} b +a_1^2 b^3 +a_1^{10} b^3 +a_1^{10}b^7 +a_1^{10} b^9 +a_1^2 "
         "b^{17} +a_1^6 b^{17} +a_1^2 b^{19} )k +(a_1^2 +a_1^6 +a_1^{10} +a_1^{14}+a_1^2 b^2 "
         "+a_1^6 b^2 +a_1^{10} b^2 +a_1^{14} b^2 +a_1^8 b^3 +a_1^{12} b^3 +a_1^6 b^4 +a_1^{10}b^4 "
         "+a_1^{12} b^5 +a_1^6 b^6 +a_1^6 b^8 +a_1^6 b^{10} +a_1^{10} b^{10} +a_1^8 b^{11} +a_1^6 "
         "b^{12} +a_1^6b^{14} +a_1^2 b^{16} +a_1^2 b^{18} )k^2 +(a_1^{10} b^3 +a_1^{14} b^3 "
         "+a_1^{10} b^5 +a_1^{10} b^7 +a_1^{10} b^9 )k^3 +(a_1^6+a_1^{14} +a_1^6 b^2 +a_1^{14} b^2 "
         "+a_1^6 b^4 +a_1^6 b^6 +a_1^6 b^8 +a_1^6 b^{10} +a_1^6 b^{12} +a_1^6 b^{14} )k^4"},
        {"d2",
         "1+a_1^4+a_1^8+a_1^{12}+a_1^2 b+a_1^{10} b+b^2+a_1^8 b^2+a_1^6 b^3+a_1^{10}b^3 +a_1^8 "
         "b^6+a_1^8 b^8+a_1^6 b^{11}+b^{16}+a_1^4 b^{16}+a_1^2 b^{17}+b^{18} +(a_1^4 b +a_1^{12} b "
         "+a_1^4 b^3 +a_1^8 b^3 +a_1^4 b^5 +a_1^8 b^5 +a_1^4 b^7 +a_1^8 b^7 +a_1^4 b^9 +a_1^8 b^9 "
         "+a_1^4 b^{11} +a_1^4 b^{13} +a_1^4 b^{15} )k +(a_1^4 +a_1^{12} +a_1^4 b^2 +a_1^{12} b^2 "
         "+a_1^4 b^4 +a_1^4 b^6 +a_1^4 b^8 +a_1^4 b^{10} +a_1^4 b^{12} +a_1^4 b^{14} )k^2"},
    };
    return sources;
}

const std::map<std::string, MPoly>& appendix_constants() {
    static const std::map<std::string, MPoly> constants = [] {
        std::map<std::string, MPoly> out;
        for (const auto& [name, text] : appendix_sources()) out.emplace(name, MPoly::parse(text));
        return out;
    }();
    return constants;
}

}  // namespace ptri
