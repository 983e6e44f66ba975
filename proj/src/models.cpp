#include "hta/models.hpp"

namespace hta::models {

AlgPtr laurent() { return Algebra::make({}, true, Mode::plain); }

AlgPtr plain(const std::vector<std::string>& names)
{
    std::vector<SymbolDecl> s;
    for (auto& n : names) s.push_back({n, 0, 0, false, ""});
    return Algebra::make(s, true, Mode::plain);
}

AlgPtr de_rham()
{
    return Algebra::make({{"z", 0, 0, false, "dz"}, {"dz", 1, 0, false, ""}}, true, Mode::dg);
}

AlgPtr polylog_dg()
{
    return Algebra::make(
        {
            {"z", 0, 0, true, "dz"},
            {"dz", 1, 0, false, ""},
            {"w", 0, 0, true, "w^2*dz"},
            {"lz", 0, 0, false, "z^-1*dz"},
            {"L1", 0, 0, false, "w*dz"},
            {"L2", 0, 0, false, "L1*z^-1*dz"},
            {"L3", 0, 0, false, "L2*z^-1*dz"},
        },
        true, Mode::dg);
}

AlgPtr crys() { return Algebra::make({{"x", 0, 1, false, ""}, {"y", 0, 1, false, ""}}, true, Mode::phi); }

AlgPtr phi_line() { return Algebra::make({{"x", 0, 1, false, ""}}, true, Mode::phi); }

AlgPtr st() { return Algebra::make({{"u", 0, 1, false, "-e"}, {"e", 1, 0, false, ""}}, true, Mode::phi_dg); }

AlgPtr free_xy() { return Algebra::make({{"x", 0, 0, false, ""}, {"y", 0, 0, false, ""}}, false, Mode::plain); }

} // namespace hta::models
