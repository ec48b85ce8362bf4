#include "promisecc/promise.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>

#include "promisecc/errors.hpp"

namespace promisecc {
namespace {

constexpr int kDefaultExhaustiveLimit = 12;

void require_k_range(int n, int k, std::string_view family) {
  if (k < 1 || k > n) {
    throw ParameterError(std::string(family) + " needs 1 <= k <= n (got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
  }
  if (2 * k < n) {
    throw ParameterError(std::string(family) + " needs k >= n/2 (got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ")");
  }
}

// Integer range [lo, hi] of intersection sizes in the DISJ_lambda NO set.
std::pair<int, int> disj_no_range(const PromiseParams& p) {
  const Rational low = p.lambda * p.n;
  const Rational high = (1 - p.lambda) * p.n;
  auto ceil_div = [](std::int64_t a, std::int64_t b) { return (a + b - 1) / b; };
  return {static_cast<int>(ceil_div(low.num(), low.den())),
          static_cast<int>(high.num() / high.den())};
}

std::vector<std::size_t> random_subset(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  return idx;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kEqK: return "EQ_K";
    case Family::kDjK: return "DJ_K";
    case Family::kDisjLambda: return "DISJ_LAMBDA";
    case Family::kDisjPrimeK: return "DISJ_PRIME_K";
  }
  return "?";
}

std::string_view to_string(Label l) {
  switch (l) {
    case Label::kYes: return "YES";
    case Label::kNo: return "NO";
    case Label::kOffPromise: return "OFF_PROMISE";
  }
  return "?";
}

std::string_view to_string(DjPromise p) {
  return p == DjPromise::kWeightEqualsK ? "exact" : "strict";
}

Family parse_family(std::string_view text) {
  if (text == "EQ_K" || text == "eqk") return Family::kEqK;
  if (text == "DJ_K" || text == "djk" || text == "dj") return Family::kDjK;
  if (text == "DISJ_LAMBDA" || text == "disj") return Family::kDisjLambda;
  if (text == "DISJ_PRIME_K" || text == "disjp") return Family::kDisjPrimeK;
  throw ParameterError("unknown family '" + std::string(text) + "'");
}

PromiseParams PromiseParams::eqk(int n, int k) {
  PromiseParams p;
  p.family = Family::kEqK;
  p.n = n;
  p.k = k;
  return p;
}

PromiseParams PromiseParams::djk(int n, int k, DjPromise promise) {
  PromiseParams p;
  p.family = Family::kDjK;
  p.n = n;
  p.k = k;
  p.dj_promise = promise;
  return p;
}

PromiseParams PromiseParams::disj(int n, Rational lambda) {
  PromiseParams p;
  p.family = Family::kDisjLambda;
  p.n = n;
  p.lambda = lambda;
  return p;
}

PromiseParams PromiseParams::disj_prime(int n, int k) {
  PromiseParams p;
  p.family = Family::kDisjPrimeK;
  p.n = n;
  p.k = k;
  return p;
}

void PromiseParams::validate() const {
  if (n < 1) throw ParameterError("n must be positive");
  switch (family) {
    case Family::kEqK:
    case Family::kDjK:
    case Family::kDisjPrimeK:
      require_k_range(n, k, to_string(family));
      break;
    case Family::kDisjLambda:
      if (!(lambda > 0) || lambda > Rational(1, 4)) {
        throw ParameterError("DISJ_LAMBDA needs 0 < lambda <= 1/4 (got " + lambda.to_string() +
                             ")");
      }
      break;
  }
}

Label classify_stats(const PromiseParams& p, const HammingStats& s) {
  switch (p.family) {
    case Family::kEqK:
      if (s.distance == 0) return Label::kYes;
      return s.distance == p.k ? Label::kNo : Label::kOffPromise;
    case Family::kDjK:
      if (s.weight_x == 0) return Label::kYes;
      if (p.dj_promise == DjPromise::kWeightEqualsK) {
        return s.weight_x == p.k ? Label::kNo : Label::kOffPromise;
      }
      return s.weight_x > p.k ? Label::kNo : Label::kOffPromise;
    case Family::kDisjLambda: {
      if (s.and_weight == 0) return Label::kYes;
      const bool in_gap =
          p.lambda * p.n <= Rational(s.and_weight) && Rational(s.and_weight) <= (1 - p.lambda) * p.n;
      return in_gap ? Label::kNo : Label::kOffPromise;
    }
    case Family::kDisjPrimeK:
      if (s.and_weight == 0) return Label::kYes;
      return s.and_weight == p.k ? Label::kNo : Label::kOffPromise;
  }
  return Label::kOffPromise;
}

Label classify(const PromiseParams& params, const BitString& x) {
  if (params.two_party()) throw InputError(std::string(to_string(params.family)) + " needs two inputs");
  params.validate();
  if (static_cast<int>(x.size()) != params.n) {
    throw DimensionError("input length " + std::to_string(x.size()) + " != n=" + std::to_string(params.n));
  }
  HammingStats s;
  s.weight_x = x.weight();
  return classify_stats(params, s);
}

Label classify(const PromiseParams& params, const BitString& x, const BitString& y) {
  if (!params.two_party()) throw InputError("DJ_K takes a single input");
  params.validate();
  if (static_cast<int>(x.size()) != params.n) {
    throw DimensionError("input length " + std::to_string(x.size()) + " != n=" + std::to_string(params.n));
  }
  return classify_stats(params, hamming_stats(x, y));
}

Label classify(const PromiseInstance& instance) {
  if (instance.y) return classify(instance.params, instance.x, *instance.y);
  return classify(instance.params, instance.x);
}

int exhaustive_limit() {
  if (const char* env = std::getenv("PROMISE_CC_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 30) return static_cast<int>(v);
  }
  return kDefaultExhaustiveLimit;
}

PromiseEnumeration::PromiseEnumeration(PromiseParams params) : params_(params) {
  params_.validate();
  const int bits = params_.two_party() ? 2 * params_.n : params_.n;
  end_ = std::uint64_t{1} << bits;
}

PromiseEnumeration::iterator::iterator(const PromiseEnumeration* owner, std::uint64_t cursor)
    : owner_(owner), cursor_(cursor) {
  current_.params = owner_->params_;
  settle();
}

PromiseEnumeration::iterator& PromiseEnumeration::iterator::operator++() {
  ++cursor_;
  settle();
  return *this;
}

void PromiseEnumeration::iterator::settle() {
  const auto& p = owner_->params_;
  const auto n = static_cast<unsigned>(p.n);
  const std::uint64_t low = (std::uint64_t{1} << n) - 1;
  for (; cursor_ < owner_->end_; ++cursor_) {
    const std::uint64_t xm = p.two_party() ? cursor_ >> n : cursor_;
    const std::uint64_t ym = p.two_party() ? cursor_ & low : 0;
    HammingStats s;
    s.weight_x = std::popcount(xm);
    s.weight_y = std::popcount(ym);
    s.distance = std::popcount(xm ^ ym);
    s.and_weight = std::popcount(xm & ym);
    const Label label = classify_stats(p, s);
    if (label == Label::kOffPromise) continue;
    current_.x = BitString::from_mask(n, xm);
    if (p.two_party()) {
      current_.y = BitString::from_mask(n, ym);
    } else {
      current_.y.reset();
    }
    current_.label = label;
    return;
  }
}

PromiseEnumeration enumerate_promise(const PromiseParams& params) {
  params.validate();
  const int limit = exhaustive_limit();
  if (params.n > limit) {
    throw LimitExceeded("exhaustive enumeration refused for n=" + std::to_string(params.n) +
                        " (limit " + std::to_string(limit) +
                        "); use random sampling or raise PROMISE_CC_MAX_N");
  }
  return PromiseEnumeration(params);
}

std::vector<PromiseInstance> sample_promise(const PromiseParams& params, std::size_t count,
                                            Rng& rng) {
  params.validate();
  const auto n = static_cast<std::size_t>(params.n);
  std::vector<PromiseInstance> out;
  out.reserve(count);

  // Coordinates of a disjoint pair with `common` forced (1,1) positions.
  auto disjoint_pair = [&](std::size_t common) {
    std::vector<std::uint8_t> xb(n), yb(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = rng.below(3);
      xb[i] = c == 1;
      yb[i] = c == 2;
    }
    for (auto i : random_subset(n, common, rng)) xb[i] = yb[i] = 1;
    return std::pair{BitString(std::move(xb)), BitString(std::move(yb))};
  };

  for (std::size_t t = 0; t < count; ++t) {
    PromiseInstance inst;
    inst.params = params;
    bool want_no = rng.below(2) == 1;
    switch (params.family) {
      case Family::kEqK: {
        std::vector<std::uint8_t> xb(n);
        for (auto& b : xb) b = static_cast<std::uint8_t>(rng.below(2));
        inst.x = BitString(xb);
        auto yb = xb;
        if (want_no) {
          for (auto i : random_subset(n, static_cast<std::size_t>(params.k), rng)) yb[i] ^= 1U;
        }
        inst.y = BitString(std::move(yb));
        break;
      }
      case Family::kDjK: {
        int weight = 0;
        if (want_no) {
          if (params.dj_promise == DjPromise::kWeightEqualsK) {
            weight = params.k;
          } else if (params.k < params.n) {
            weight = params.k + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.n - params.k)));
          }
        }
        std::vector<std::uint8_t> xb(n, 0);
        for (auto i : random_subset(n, static_cast<std::size_t>(weight), rng)) xb[i] = 1;
        inst.x = BitString(std::move(xb));
        break;
      }
      case Family::kDisjLambda: {
        auto [lo, hi] = disj_no_range(params);
        lo = std::max(lo, 1);
        std::size_t common = 0;
        if (want_no && lo <= hi) {
          common = static_cast<std::size_t>(lo) + rng.below(static_cast<std::uint64_t>(hi - lo + 1));
        }
        auto [x, y] = disjoint_pair(common);
        inst.x = std::move(x);
        inst.y = std::move(y);
        break;
      }
      case Family::kDisjPrimeK: {
        auto [x, y] = disjoint_pair(want_no ? static_cast<std::size_t>(params.k) : 0);
        inst.x = std::move(x);
        inst.y = std::move(y);
        break;
      }
    }
    inst.label = classify(inst);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace promisecc
