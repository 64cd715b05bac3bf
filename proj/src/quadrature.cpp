#include "genfrac/quadrature.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace genfrac {
namespace {

using RuleKey = std::tuple<int, double, double>;

struct RuleCache {
  std::shared_mutex mutex;
  std::map<RuleKey, std::shared_ptr<const JacobiRuled>> rules;
};

RuleCache& rule_cache() {
  static RuleCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const JacobiRuled> cached_jacobi_rule(int n, double exp_right, double exp_left) {
  auto& cache = rule_cache();
  const RuleKey key{n, exp_right, exp_left};
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.rules.find(key); it != cache.rules.end()) return it->second;
  }
  // Built outside the lock: two threads may both build the same rule, the
  // first insertion wins and both results are identical.
  auto rule = std::make_shared<const JacobiRuled>(gauss_jacobi_rule<double>(n, exp_right, exp_left));
  std::unique_lock lock(cache.mutex);
  auto [it, inserted] = cache.rules.emplace(key, std::move(rule));
  return it->second;
}

}  // namespace genfrac
