#ifndef LCLAB_HILBERT_HPP
#define LCLAB_HILBERT_HPP

#include <optional>
#include <vector>

#include "lclab/mora.hpp"

namespace lclab {

// Hilbert function of a graded quotient, stored exactly through the numerator
// of its Hilbert series over (1-t)^nvars. Values, the dimension (degree of
// the polynomial tail plus one) and finite lengths all derive from it.
class HilbertData {
  public:
    HilbertData() = default;
    HilbertData(int nvars, std::vector<long long> numerator);

    int nvars() const { return nvars_; }
    const std::vector<long long>& numerator() const { return num_; }

    long long value(int32_t n) const;
    std::vector<long long> prefix(int32_t upto) const;

    // Krull dimension of the graded quotient; nullopt for the zero module.
    std::optional<int> dim() const;
    bool isZeroModule() const { return num_.empty(); }

    // Sum of all values when the dimension is zero, nullopt otherwise.
    std::optional<long long> finiteLength() const;

    // Largest degree with a nonzero value when the length is finite.
    int32_t lastNonzeroDegree() const;

    // Degree from which on the values agree with the polynomial tail.
    int32_t stabilizationDegree() const;

    bool operator==(const HilbertData& o) const {
        return nvars_ == o.nvars_ && num_ == o.num_;
    }
    bool operator!=(const HilbertData& o) const { return !(*this == o); }

    HilbertData operator-(const HilbertData& o) const;
    HilbertData operator+(const HilbertData& o) const;

  private:
    void trim();
    int nvars_ = 0;
    std::vector<long long> num_;  // num_[d] = coefficient of t^d
};

// Number of standard monomials per degree of the quotient by a leading
// module: the Hilbert function of the associated graded quotient.
HilbertData hilbertFunction(const Ring& R, const LeadingModule& L,
                            const std::vector<int32_t>& shifts = {});

HilbertData hilbertOfIdeal(const Ring& R, const std::vector<Polynomial>& gens);

bool hfEqual(const Ring& R, const std::vector<Polynomial>& I,
             const std::vector<Polynomial>& J);

int krullDim(const Ring& R, const LeadingModule& L);

std::optional<long long> finiteLength(const Ring& R, const LeadingModule& L);

// Degrees of a minimal homogeneous generating set, pruned by graded Nakayama.
std::vector<int32_t> minGradedGeneratorDegrees(const Ring& R, const FreeModule& F,
                                               const std::vector<VectorElement>& gens);

// Artin-Rees number of <gens> inside the ambient free module: the top degree
// among minimal homogeneous generators of the initial module.
int32_t artinRees(const Ring& R, const FreeModule& F,
                  const std::vector<VectorElement>& gens);

}  // namespace lclab

#endif
