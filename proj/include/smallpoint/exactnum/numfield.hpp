#pragma once

// Number fields Q(theta) = Q[y]/(m) with m monic, integral and irreducible,
// optionally with a chosen real embedding of theta. A null field pointer
// stands for Q itself, so rational constants mix freely with field elements.

#include "smallpoint/exactnum/ran.hpp"

#include <memory>
#include <optional>

namespace smallpoint {

struct NumberFieldCtx {
    ZPoly m; // monic irreducible, degree >= 2
    QPoly mq;
    std::optional<RAN> root; // real embedding of the generator, when chosen
    int degree() const { return ::smallpoint::degree(m); }
};
using FieldPtr = std::shared_ptr<const NumberFieldCtx>;

FieldPtr make_field(const ZPoly& monic_m, std::optional<RAN> root = std::nullopt);
inline int field_degree(const FieldPtr& f) { return f ? f->degree() : 1; }

class NFElem {
public:
    NFElem() = default;
    NFElem(int v) : v_{Rat(v)} { trim(v_); }
    NFElem(long v) : v_{Rat(v)} { trim(v_); }
    NFElem(const Int& v) : v_{Rat(v)} { trim(v_); }
    NFElem(const Rat& v) : v_{v} { trim(v_); }
    /* reduces rep modulo the defining polynomial */
    NFElem(FieldPtr f, QPoly rep);

    const FieldPtr& field() const { return f_; }
    /* coordinates in the power basis 1, theta, ..., lowest first */
    const QPoly& rep() const { return v_; }
    bool is_zero() const { return v_.empty(); }
    bool is_rational() const { return v_.size() <= 1; }
    Rat rational() const;
    NFElem inverse() const;
    /* the real value under the field's embedding */
    RAN to_ran() const;
    DyadicInterval enclose(const Rat& eps) const;
    /* characteristic polynomial of multiplication, monic over Q of degree [K:Q] */
    QPoly charpoly() const;

    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const NFElem& a, const NFElem& b);
    friend NFElem operator/(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a);
    friend bool operator==(const NFElem& a, const NFElem& b);
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

private:
    FieldPtr f_;
    QPoly v_;
};

inline bool is_zero_coef(const NFElem& a) { return a.is_zero(); }

/* The generator theta of the field as an element. */
NFElem generator(const FieldPtr& f);

/* Q(a) with its embedding, and a as an element of it (null field for rationals). */
std::pair<FieldPtr, NFElem> field_of(const RAN& a);

/* Compositum of two real fields given by a primitive element gamma_b + k*gamma_a. */
struct FieldJoin {
    FieldPtr field;
    NFElem image_a; // image of the generator of a (zero when a is Q)
    NFElem image_b;
};
FieldJoin join_fields(const FieldPtr& a, const FieldPtr& b, int max_degree = 64);

/* x re-expressed in a larger field, given the image of its field's generator. */
NFElem embed(const NFElem& x, const NFElem& image_of_generator);

/* one real field holding every number, built by successive joins; throws
 * budget_exhausted past max_degree */
std::pair<FieldPtr, std::vector<NFElem>> common_field(const std::vector<RAN>& xs, int max_degree = 64);

/* Norm to Q of a polynomial with coefficients in a single field: the product
 * of its conjugates. */
QPoly nf_norm(const UPoly<NFElem>& h);

/* Real roots of h in the field's real embedding, each as an element of an
 * extension field together with the image of the old generator. */
struct ExtensionRoot {
    FieldPtr field;
    NFElem image_of_generator;
    NFElem root;
};
std::vector<ExtensionRoot> real_roots_over(const UPoly<NFElem>& h, const FieldPtr& k, int max_degree = 64);

UPoly<NFElem> to_nf_poly(const QPoly& p);

} // namespace smallpoint
