#include "gaps/tate_series.hpp"

#include <set>

namespace gaps {

namespace {

const std::pair<Role, const char*> kRoleNames[] = {
    {Role::Unipotent, "unipotent"},   {Role::LowerParam, "lower_param"}, {Role::UpperParam, "upper_param"},
    {Role::RescaledParam, "rescaled_param"}, {Role::DiagParam, "diag_param"}, {Role::ResScalar, "res_scalar"},
    {Role::Slot, "slot"},
};

}  // namespace

std::string role_name(Role r) {
    for (const auto& [k, v] : kRoleNames)
        if (k == r) return v;
    return "unipotent";
}

Role role_from_name(const std::string& s) {
    for (const auto& [k, v] : kRoleNames)
        if (s == v) return k;
    throw VariableMismatch("unknown variable role: " + s);
}

VariableSet::VariableSet(std::vector<Variable> vars) : vars_(std::move(vars)) {
    if (static_cast<int>(vars_.size()) > kMaxVars) throw VariableMismatch("at most 16 variables are supported");
    std::set<std::string> seen;
    for (const auto& v : vars_)
        if (!seen.insert(v.name).second) throw VariableMismatch("duplicate variable name " + v.name);
    for (int i = 0; i < size(); ++i)
        if (weight(i)) mask_ |= Mono(0xF) << (4 * (15 - i));
}

int VariableSet::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (vars_[i].name == name) return i;
    return -1;
}

VarsPtr make_vars(std::vector<Variable> vars) { return std::make_shared<const VariableSet>(std::move(vars)); }

Mono mono_from(const std::vector<int>& e) {
    Mono m = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > VariableSet::kMaxDegree) throw TruncationInsufficient("exponent out of range");
        m = mono_set(m, static_cast<int>(i), e[i]);
    }
    return m;
}

std::vector<int> mono_to(Mono m, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = mono_exp(m, i);
    return e;
}

}  // namespace gaps
