#include "kronecker/quiver.hpp"

#include "kronecker/errors.hpp"

#include <algorithm>

namespace kronecker {

QuiverSpec::QuiverSpec(int arrows, int dim1, int dim2) : n(arrows), r1(dim1), r2(dim2) {
    if (n < 1 || r1 < 1 || r2 < 1) {
        throw PreconditionError("quiver spec needs n, r1, r2 >= 1");
    }
}

QuiverSpec::Triple QuiverSpec::triple(std::size_t flat) const {
    const int k = static_cast<int>(flat % static_cast<std::size_t>(r1)) + 1;
    flat /= static_cast<std::size_t>(r1);
    const int j = static_cast<int>(flat % static_cast<std::size_t>(r2)) + 1;
    const int i = static_cast<int>(flat / static_cast<std::size_t>(r2)) + 1;
    return {i, j, k};
}

std::string QuiverSpec::name() const {
    return "K^" + std::to_string(n) + "_{" + std::to_string(r1) + "," + std::to_string(r2) + "}";
}

std::int64_t ExponentVector::total() const {
    std::int64_t s = 0;
    for (auto x : values) s += x;
    return s;
}

bool ExponentVector::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](std::int64_t x) { return x == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
    return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& o) const {
    ExponentVector r(*this);
    for (std::size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
    return r;
}

std::int64_t height(const ExponentVector& v, const QuiverSpec& spec) {
    const std::int64_t t = v.total();
    if (t % spec.lcm() != 0) return -1;
    return t / spec.lcm();
}

}  // namespace kronecker
