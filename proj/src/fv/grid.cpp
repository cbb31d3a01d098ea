#include "smhd/fv/grid.hpp"

namespace smhd::fv {

namespace {

constexpr std::size_t kLeaf = 16;

template <typename T>
T cascade(std::span<const T> v, T zero)
{
    if (v.size() <= kLeaf) {
        T acc = zero;
        for (const auto& x : v)
            acc += x;
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return cascade(v.first(half), zero) + cascade(v.subspan(half), zero);
}

} // namespace

double pairwise_sum(std::span<const double> values)
{
    return cascade(values, 0.0);
}

Vector5d pairwise_sum(std::span<const Vector5d> values)
{
    return cascade<Vector5d>(values, Vector5d::Zero());
}

} // namespace smhd::fv
