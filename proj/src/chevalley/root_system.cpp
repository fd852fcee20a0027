#include "lieinv/chevalley/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lieinv {

int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

Root operator+(const Root& a, const Root& b) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Root operator-(const Root& a, const Root& b) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

Root operator-(const Root& a) {
  Root c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

namespace {

// Simple-root Gram matrix; the long roots of each type have squared length 2.
RatMatrix simple_gram(char type, std::size_t n) {
  auto bad = [&] { return std::invalid_argument("no simple Lie algebra of type " + std::string(1, type) + std::to_string(n)); };
  RatMatrix g(n, n);
  auto chain = [&](std::size_t len) {
    for (std::size_t i = 0; i < n; ++i) g(i, i) = len;
    for (std::size_t i = 0; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = -1;
  };
  switch (type) {
    case 'A':
      if (n < 1) throw bad();
      chain(2);
      break;
    case 'B':
      if (n < 2) throw bad();
      chain(2);
      g(n - 1, n - 1) = 1;
      break;
    case 'C':
      if (n < 2) throw bad();
      chain(2);
      g(n - 1, n - 1) = 4;
      g(n - 2, n - 1) = g(n - 1, n - 2) = -2;
      break;
    case 'D':
      if (n < 4) throw bad();
      chain(2);
      g(n - 2, n - 1) = g(n - 1, n - 2) = 0;
      g(n - 3, n - 1) = g(n - 1, n - 3) = -1;
      break;
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      auto link = [&](std::size_t a, std::size_t b) { g(a - 1, b - 1) = g(b - 1, a - 1) = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (std::size_t i = 4; i < n; ++i) link(i, i + 1);
      break;
    }
    case 'F':
      if (n != 4) throw bad();
      g(0, 0) = g(1, 1) = 2;
      g(2, 2) = g(3, 3) = 1;
      g(0, 1) = g(1, 0) = -1;
      g(1, 2) = g(2, 1) = -1;
      g(2, 3) = g(3, 2) = Rational(-1, 2);
      break;
    case 'G':
      if (n != 2) throw bad();
      g(0, 0) = 2;
      g(1, 1) = 6;
      g(0, 1) = g(1, 0) = -3;
      break;
    default:
      throw bad();
  }
  return g;
}

}  // namespace

RootSystem::RootSystem(char type, std::size_t rank) : type_(type), rank_(rank), gram_(simple_gram(type, rank)) {
  const std::size_t n = rank_;
  cartan_ = Matrix<int>(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational a = 2 * gram_(i, j) / gram_(j, j);
      if (a.get_den() != 1) throw std::logic_error("non-integral Cartan entry");
      cartan_(i, j) = static_cast<int>(a.get_num().get_si());
    }
  }
  // Grow root strings: beta + alpha_i is a root iff q > 0, where q - p = -<beta, alpha_i^vee>.
  std::set<Root> known;
  std::vector<Root> layer;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    known.insert(r);
  }
  while (!layer.empty()) {
    positive_.insert(positive_.end(), layer.begin(), layer.end());
    std::set<Root> next;
    for (const auto& b : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        Root ai(n, 0);
        ai[i] = 1;
        int p = 0;
        for (Root down = b - ai; known.count(down); down = down - ai) ++p;
        const Rational q = p - pairing(b, ai);
        if (q > 0) {
          Root up = b + ai;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(layer.begin(), layer.end());
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a < b;
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k], static_cast<int>(k));
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (b[j] != 0) s += gram_(i, j) * a[i] * b[j];
    }
  }
  return s;
}

Rational RootSystem::pairing(const Root& a, const Root& b) const { return 2 * inner(a, b) / inner(b, b); }

int RootSystem::positive_index(const Root& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_root(const Root& r) const { return positive_index(r) >= 0 || positive_index(-r) >= 0; }

}  // namespace lieinv
