#pragma once

#include "plumbhf/intersection_form.hpp"
#include "plumbhf/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plumbhf {

// Pairing row [<K,v_1>, ..., <K,v_n>].
using CharVector = std::vector<int>;

struct SpinCClass {
    CharVector representative;
    std::vector<int> member_ids;
};

bool is_characteristic(const CharVector& k, const IntersectionForm& form);

// K + sign * 2PD(v)
CharVector add_2pd(const CharVector& k, int v, const IntersectionForm& form, int sign = 1);
void add_2pd_inplace(CharVector& k, int v, const IntersectionForm& form, int sign = 1);

Rational square(const CharVector& k, const IntersectionForm& form);
Rational degree(const CharVector& k, const IntersectionForm& form);

// Characteristic vectors with |x_i| <= -m_i + 2*nlevel, lexicographic.
std::vector<CharVector> enumerate_b_n(const IntersectionForm& form, int nlevel);
// Characteristic vectors with m_i + 2 <= x_i <= -m_i, lexicographic.
std::vector<CharVector> initial_candidates(const IntersectionForm& form);
std::uint64_t initial_candidate_count(const IntersectionForm& form);

bool same_spinc(const CharVector& a, const CharVector& b, const IntersectionForm& form);

// Classes in order of first appearance; member_ids index into `vectors`.
std::vector<SpinCClass> partition_spinc(const std::vector<CharVector>& vectors, const IntersectionForm& form);

std::vector<std::vector<std::int64_t>> spinc_keys(const std::vector<CharVector>& vectors,
                                                  const IntersectionForm& form);

std::string format_vector(const CharVector& k);

namespace serial {
std::vector<CharVector> initial_candidates(const IntersectionForm& form);
std::vector<std::vector<std::int64_t>> spinc_keys(const std::vector<CharVector>& vectors,
                                                  const IntersectionForm& form);
}  // namespace serial

}  // namespace plumbhf
