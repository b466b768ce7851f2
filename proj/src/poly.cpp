#include "catwords/poly.hpp"

#include <algorithm>
#include <map>

namespace catwords {

namespace {

bool term_less(const Poly2::Term& a, const Poly2::Term& b) {
  if (a.dx != b.dx) return a.dx < b.dx;
  return a.dy < b.dy;
}

}  // namespace

Poly2::Poly2(std::initializer_list<Term> terms) : terms_(terms) { normalize(); }

void Poly2::normalize() {
  std::sort(terms_.begin(), terms_.end(), term_less);
  std::vector<Term> merged;
  for (const Term& t : terms_) {
    if (t.dx < 0 || t.dy < 0) throw std::invalid_argument("negative degree");
    if (!merged.empty() && merged.back().dx == t.dx && merged.back().dy == t.dy) {
      merged.back().c = checked_add(merged.back().c, t.c);
    } else {
      merged.push_back(t);
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.c == 0; }),
               merged.end());
  terms_ = std::move(merged);
}

int Poly2::max_x_degree() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.dx);
  return d;
}

int Poly2::max_y_degree() const {
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.dy);
  return d;
}

int128 Poly2::coefficient(int dx, int dy) const {
  for (const Term& t : terms_) {
    if (t.dx == dx && t.dy == dy) return t.c;
  }
  return 0;
}

Poly2 Poly2::operator+(const Poly2& other) const {
  Poly2 r;
  r.terms_ = terms_;
  r.terms_.insert(r.terms_.end(), other.terms_.begin(), other.terms_.end());
  r.normalize();
  return r;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (Term& t : r.terms_) t.c = checked_sub(int128(0), t.c);
  return r;
}

Poly2 Poly2::operator-(const Poly2& other) const { return *this + (-other); }

Poly2 Poly2::operator*(const Poly2& other) const {
  std::map<std::pair<int, int>, int128> acc;
  for (const Term& a : terms_) {
    for (const Term& b : other.terms_) {
      auto key = std::make_pair(a.dx + b.dx, a.dy + b.dy);
      auto [it, inserted] = acc.emplace(key, int128(0));
      it->second = checked_add(it->second, checked_mul(a.c, b.c));
    }
  }
  Poly2 r;
  for (const auto& [key, c] : acc) {
    if (c != 0) r.terms_.push_back({key.first, key.second, c});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

Poly2 Poly2::substitute_y1() const {
  Poly2 r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.dy = 0;
  r.normalize();
  return r;
}

std::string Poly2::text() const {
  if (terms_.empty()) return "0";
  std::vector<Term> ordered = terms_;
  std::sort(ordered.begin(), ordered.end(), [](const Term& a, const Term& b) {
    if (a.dx != b.dx) return a.dx > b.dx;
    return a.dy > b.dy;
  });
  std::string out;
  bool first = true;
  for (const Term& t : ordered) {
    int128 c = t.c;
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    int128 mag = neg ? checked_sub(int128(0), c) : c;
    std::string vars;
    if (t.dx > 0) vars += (t.dx == 1) ? "x" : "x^" + std::to_string(t.dx);
    if (t.dy > 0) {
      if (!vars.empty()) vars += "*";
      vars += (t.dy == 1) ? "y" : "y^" + std::to_string(t.dy);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace catwords
