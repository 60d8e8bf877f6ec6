#include "gtmod/jet.hpp"

#include <algorithm>
#include <sstream>

#include "gtmod/errors.hpp"

namespace gtmod {

namespace {

bool less_exp(const LaurentJet::Term& a, const LaurentJet::Term& b) { return a.e < b.e; }

void check_same(const LaurentJet& f, const LaurentJet& g) {
  if (!(f.context() == g.context())) throw ContextMismatch();
}

bool inside(const Exponents& e, const Exponents& box, int t) {
  for (int r = 0; r < t; ++r)
    if (e[r] > box[r]) return false;
  return true;
}

// Sorts, merges equal exponents and drops zeros.
void merge_terms(std::vector<LaurentJet::Term>& terms) {
  if (terms.size() <= 1) {
    if (terms.size() == 1 && terms[0].c.is_zero()) terms.clear();
    return;
  }
  std::sort(terms.begin(), terms.end(), less_exp);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    ExactScalar sum = terms[i].c;
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].e == terms[i].e; ++j) sum += terms[j].c;
    if (!sum.is_zero()) {
      terms[out].e = terms[i].e;
      terms[out].c = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

JetContext::JetContext(int t_, int K_) : t(t_), K(K_) {
  if (t < 0 || t > kMaxJetVars) throw IndexOutOfRange("jet context supports 0.." + std::to_string(kMaxJetVars) + " variables");
  if (K < 2 || K > kMaxTruncation) throw IndexOutOfRange("truncation order out of range");
}

LaurentJet::LaurentJet(const JetContext& ctx) : ctx_(ctx) {
  for (int r = 0; r < ctx.t; ++r) {
    validity_[r] = static_cast<std::int16_t>(ctx.K);
    low_[r] = static_cast<std::int16_t>(ctx.K + 1);
  }
}

void LaurentJet::normalize() {
  for (int r = 0; r < ctx_.t; ++r) {
    if (validity_[r] > ctx_.K) validity_[r] = static_cast<std::int16_t>(ctx_.K);
    if (low_[r] > validity_[r] + 1) low_[r] = static_cast<std::int16_t>(validity_[r] + 1);
  }
  if (std::erase_if(terms_, [&](const Term& term) { return !inside(term.e, validity_, ctx_.t); }) > 0) exact_ = false;
  if (exact_ && !terms_.empty()) {
    for (int r = 0; r < ctx_.t; ++r) {
      std::int16_t lo = terms_.front().e[r];
      for (const auto& term : terms_) lo = std::min(lo, term.e[r]);
      low_[r] = std::max(low_[r], lo);
    }
  }
}

bool LaurentJet::has_negative_exponents() const {
  for (const auto& term : terms_)
    for (int r = 0; r < ctx_.t; ++r)
      if (term.e[r] < 0) return true;
  return false;
}

ExactScalar LaurentJet::coefficient(const Exponents& e) const {
  Term key{e, {}};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, less_exp);
  if (it != terms_.end() && it->e == e) return it->c;
  return ExactScalar();
}

std::string LaurentJet::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    if (!first) os << " + ";
    first = false;
    os << term.c;
    for (int r = 0; r < ctx_.t; ++r)
      if (term.e[r] != 0) os << "*" << ctx_.var_name(r + 1) << "^" << term.e[r];
  }
  return os.str();
}

Exponents zero_exponents() { return Exponents{}; }

Exponents unit_exponents(std::uint32_t mask) {
  Exponents e{};
  for (int r = 0; r < kMaxJetVars; ++r)
    if (mask & (1u << r)) e[r] = 1;
  return e;
}

LaurentJet jet_const(const ExactScalar& c, const JetContext& ctx) {
  if (c.is_zero()) return LaurentJet(ctx);
  return jet_from_terms(ctx, {{zero_exponents(), c}});
}

LaurentJet jet_var(int r, const JetContext& ctx) {
  if (r < 1 || r > ctx.t) throw IndexOutOfRange("variable index " + std::to_string(r) + " out of range");
  Exponents e{};
  e[r - 1] = 1;
  return jet_from_terms(ctx, {{e, ExactScalar(1)}});
}

LaurentJet jet_from_terms(const JetContext& ctx, std::vector<LaurentJet::Term> terms) {
  LaurentJet out(ctx);
  for (const auto& term : terms)
    for (int r = 0; r < ctx.t; ++r)
      if (term.e[r] > ctx.K) throw PrecisionExhausted("exponent exceeds truncation order");
  merge_terms(terms);
  out.terms_ = std::move(terms);
  out.exact_ = true;
  if (!out.terms_.empty()) {
    for (int r = 0; r < ctx.t; ++r) {
      std::int16_t lo = out.terms_.front().e[r];
      for (const auto& term : out.terms_) lo = std::min(lo, term.e[r]);
      out.low_[r] = lo;
    }
  }
  return out;
}

LaurentJet jet_add(const LaurentJet& f, const LaurentJet& g) {
  check_same(f, g);
  const int t = f.ctx_.t;
  LaurentJet out(f.ctx_);
  for (int r = 0; r < t; ++r) {
    out.validity_[r] = std::min(f.validity_[r], g.validity_[r]);
    out.low_[r] = std::min(f.low_[r], g.low_[r]);
  }
  out.exact_ = f.exact_ && g.exact_;
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto a = f.terms_.begin(), b = g.terms_.begin();
  while (a != f.terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end() || (a != f.terms_.end() && a->e < b->e)) {
      out.terms_.push_back(*a++);
    } else if (a == f.terms_.end() || b->e < a->e) {
      out.terms_.push_back(*b++);
    } else {
      ExactScalar c = a->c + b->c;
      if (!c.is_zero()) out.terms_.push_back({a->e, std::move(c)});
      ++a;
      ++b;
    }
  }
  out.normalize();
  return out;
}

LaurentJet jet_neg(const LaurentJet& f) {
  LaurentJet out = f;
  for (auto& term : out.terms_) term.c = -term.c;
  return out;
}

LaurentJet jet_sub(const LaurentJet& f, const LaurentJet& g) { return jet_add(f, jet_neg(g)); }

LaurentJet jet_scale(const LaurentJet& f, const ExactScalar& c) {
  if (c.is_zero()) {
    LaurentJet out(f.ctx_);
    out.validity_ = f.validity_;
    out.exact_ = true;
    out.normalize();
    return out;
  }
  LaurentJet out = f;
  for (auto& term : out.terms_) term.c *= c;
  return out;
}

LaurentJet jet_mul(const LaurentJet& f, const LaurentJet& g) {
  check_same(f, g);
  const int t = f.ctx_.t;
  LaurentJet out(f.ctx_);
  for (int r = 0; r < t; ++r) {
    int v = std::min({f.low_[r] + g.validity_[r], g.low_[r] + f.validity_[r], f.ctx_.K});
    out.validity_[r] = static_cast<std::int16_t>(v);
    out.low_[r] = static_cast<std::int16_t>(std::min(f.low_[r] + g.low_[r], v + 1));
  }
  out.terms_.reserve(f.terms_.size() * g.terms_.size());
  bool dropped = false;
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) {
      Exponents e{};
      bool keep = true;
      for (int r = 0; r < t; ++r) {
        e[r] = static_cast<std::int16_t>(a.e[r] + b.e[r]);
        if (e[r] > out.validity_[r]) {
          keep = false;
          break;
        }
      }
      if (keep)
        out.terms_.push_back({e, a.c * b.c});
      else
        dropped = true;
    }
  }
  merge_terms(out.terms_);
  out.exact_ = f.exact_ && g.exact_ && !dropped;
  out.normalize();
  return out;
}

LaurentJet jet_inv(const LaurentJet& f) {
  if (f.is_zero()) throw ZeroDivision();
  const int t = f.ctx_.t;
  Exponents m = f.terms_.front().e;
  for (const auto& term : f.terms_)
    for (int r = 0; r < t; ++r) m[r] = std::min(m[r], term.e[r]);
  ExactScalar lead = f.coefficient(m);
  if (lead.is_zero()) throw NotInvertible("lowest-order part of " + f.str() + " is not a single monomial");

  // f = lead * s^m * (1 + h) with h a power series without constant term.
  Exponents box{};
  LaurentJet out(f.ctx_);
  for (int r = 0; r < t; ++r) {
    box[r] = static_cast<std::int16_t>(f.validity_[r] - m[r]);
    int v = std::min(f.validity_[r] - 2 * m[r], f.ctx_.K);
    if (v < 1)
      throw PrecisionExhausted("inverse of " + f.str() + " keeps no exact terms beyond order 0 in " +
                               f.ctx_.var_name(r + 1));
    out.validity_[r] = static_cast<std::int16_t>(v);
    out.low_[r] = static_cast<std::int16_t>(-m[r]);
  }
  ExactScalar inv_lead = lead.inverse();
  std::vector<LaurentJet::Term> minus_h;
  for (const auto& term : f.terms_) {
    Exponents e{};
    for (int r = 0; r < t; ++r) e[r] = static_cast<std::int16_t>(term.e[r] - m[r]);
    if (e == Exponents{}) continue;
    minus_h.push_back({e, -(term.c * inv_lead)});
  }

  // 1/(1+h) = sum_j (-h)^j inside the box.
  std::vector<LaurentJet::Term> sum{{Exponents{}, ExactScalar(1)}};
  std::vector<LaurentJet::Term> power = sum;
  while (!power.empty() && !minus_h.empty()) {
    std::vector<LaurentJet::Term> next;
    for (const auto& a : power) {
      for (const auto& b : minus_h) {
        Exponents e{};
        bool keep = true;
        for (int r = 0; r < t; ++r) {
          e[r] = static_cast<std::int16_t>(a.e[r] + b.e[r]);
          if (e[r] > box[r]) {
            keep = false;
            break;
          }
        }
        if (keep) next.push_back({e, a.c * b.c});
      }
    }
    merge_terms(next);
    sum.insert(sum.end(), next.begin(), next.end());
    power = std::move(next);
  }
  merge_terms(sum);
  for (auto& term : sum) {
    for (int r = 0; r < t; ++r) term.e[r] = static_cast<std::int16_t>(term.e[r] - m[r]);
    term.c *= inv_lead;
  }
  out.terms_ = std::move(sum);
  out.exact_ = f.exact_ && minus_h.empty();
  out.normalize();
  return out;
}

LaurentJet jet_ddiff(const LaurentJet& f, int r) {
  if (r < 1 || r > f.ctx_.t) throw IndexOutOfRange("variable index " + std::to_string(r) + " out of range");
  const int i = r - 1;
  LaurentJet out(f.ctx_);
  out.validity_ = f.validity_;
  out.low_ = f.low_;
  out.exact_ = f.exact_;
  out.validity_[i] = static_cast<std::int16_t>(f.validity_[i] - 1);
  if (f.low_[i] != 0) out.low_[i] = static_cast<std::int16_t>(f.low_[i] - 1);
  const ExactScalar half(1, 2);
  for (const auto& term : f.terms_) {
    if (term.e[i] == 0) continue;
    LaurentJet::Term d = term;
    d.e[i] = static_cast<std::int16_t>(term.e[i] - 1);
    d.c = term.c * ExactScalar(term.e[i]) * half;
    out.terms_.push_back(std::move(d));
  }
  out.normalize();
  return out;
}

ExactScalar jet_read(const LaurentJet& f, const Exponents& e) {
  const int t = f.context().t;
  bool taylor = true;
  for (int r = 0; r < t; ++r) {
    if (e[r] > f.validity()[r])
      throw PrecisionExhausted("coefficient requested beyond validity in " + f.context().var_name(r + 1));
    if (e[r] < 0) taylor = false;
  }
  if (taylor && f.has_negative_exponents()) throw NotSmooth("jet " + f.str() + " has a pole at the origin");
  return f.coefficient(e);
}

LaurentJet jet_twist(const LaurentJet& f, std::uint32_t mask) {
  LaurentJet out = f;
  for (auto& term : out.terms_) {
    int parity = 0;
    for (int r = 0; r < f.ctx_.t; ++r)
      if (mask & (1u << r)) parity += term.e[r];
    if (parity & 1) term.c = -term.c;
  }
  return out;
}

LaurentJet jet_mul_monomial(const LaurentJet& f, const Exponents& m) {
  LaurentJet out = f;
  for (auto& term : out.terms_)
    for (int r = 0; r < f.ctx_.t; ++r) term.e[r] = static_cast<std::int16_t>(term.e[r] + m[r]);
  for (int r = 0; r < f.ctx_.t; ++r) {
    out.validity_[r] = static_cast<std::int16_t>(f.validity_[r] + m[r]);
    out.low_[r] = static_cast<std::int16_t>(f.low_[r] + m[r]);
  }
  out.normalize();
  return out;
}

bool jets_agree(const LaurentJet& f, const LaurentJet& g) {
  check_same(f, g);
  const int t = f.context().t;
  Exponents box{};
  for (int r = 0; r < t; ++r) box[r] = std::min(f.validity()[r], g.validity()[r]);
  for (const auto& term : f.terms())
    if (inside(term.e, box, t) && !(g.coefficient(term.e) == term.c)) return false;
  for (const auto& term : g.terms())
    if (inside(term.e, box, t) && !(f.coefficient(term.e) == term.c)) return false;
  return true;
}

}  // namespace gtmod
