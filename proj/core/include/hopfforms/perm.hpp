#pragma once

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopfforms {

// Permutation of {0, ..., n-1}; img_[i] is the image of i.
// Composition is right-to-left: (a*b)(x) = a(b(x)).
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("Perm: not a bijection");
      seen[v] = true;
    }
  }
  static Perm identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_.at(i); }
  const std::vector<int>& images() const { return img_; }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
    std::vector<int> img(a.degree());
    for (int i = 0; i < a.degree(); ++i) img[i] = a.img_[b.img_[i]];
    Perm p;
    p.img_ = std::move(img);  // already a bijection
    return p;
  }

  Perm inverse() const {
    std::vector<int> img(degree());
    for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
    Perm p;
    p.img_ = std::move(img);
    return p;
  }

  Perm pow(long e) const {
    Perm acc = identity(degree()), base = *this;
    if (e < 0) {
      base = base.inverse();
      e = -e;
    }
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  bool has_fixed_point() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] == i) return true;
    return false;
  }

  int order() const {
    int ord = 1;
    Perm p = *this;
    while (!p.is_identity()) {
      p = p * *this;
      ++ord;
      if (ord > degree() * degree()) throw std::logic_error("Perm: order overflow");
    }
    return ord;
  }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      std::vector<int> cyc;
      int j = i;
      while (!seen[j]) {
        seen[j] = true;
        cyc.push_back(j);
        j = img_[j];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::string cycle_str() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
      os << "(";
      for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << ")";
    }
    return os.str();
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.img_ != b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
  std::vector<int> img_;
};

}  // namespace hopfforms
