#include "shimura/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace shimura {

ScanStats& ScanStats::operator+=(const ScanStats& o) {
  multisets_visited += o.multisets_visited;
  multisets_pruned += o.multisets_pruned;
  multisets_odd += o.multisets_odd;
  multisets_non_canonical += o.multisets_non_canonical;
  multisets_unrealized += o.multisets_unrealized;
  tuples_visited += o.tuples_visited;
  passports += o.passports;
  return *this;
}

ScanBounds ScanBounds::with_gmax(int gprime, int gmax) {
  if (gprime < 1) throw std::invalid_argument("scan bounds need g' >= 1");
  ScanBounds b;
  b.gprime = gprime;
  b.gmax = gmax;
  b.max_order = 2 * (2 * gmax - 2) / (4 * gprime - 3);
  b.max_order_etale = gprime >= 2 ? (2 * gmax - 2) / (2 * gprime - 2) : 0;
  b.overridden = gmax != 6 * gprime + 1;
  return b;
}

ScanBounds ScanBounds::defaults(int gprime) { return with_gmax(gprime, 6 * gprime + 1); }

int ScanBounds::max_branch_points(int order) const {
  int slack = 2 * gmax - 2 - order * (2 * gprime - 2);
  return slack < 0 ? -1 : 2 * slack / order;
}

namespace {

// Finds (alpha_j, beta_j), j = 1..count, with prod [a_j, b_j] = z whose
// span together with K is all of G. Memoized on (count, z, K).
class CompletionSearch {
 public:
  explicit CompletionSearch(const PermGroup& g) : g_(g) {}

  const std::optional<std::vector<std::pair<Element, Element>>>& find(int count, Element z, ElementSet k) {
    auto key = std::make_tuple(count, z, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<std::vector<std::pair<Element, Element>>> out;
    if (count == 0) {
      if (z == g_.identity() && k == g_.all()) out.emplace();
    } else {
      const int n = g_.order();
      for (Element a = 0; a < n && !out; ++a)
        for (Element b = 0; b < n && !out; ++b) {
          Element c = g_.commutator(a, b);
          Element rest = g_.mul(g_.inv(c), z);
          ElementSet k2 = g_.closure(k | singleton(a) | singleton(b));
          const auto& sub = find(count - 1, rest, k2);
          if (sub) {
            std::vector<std::pair<Element, Element>> v{{a, b}};
            v.insert(v.end(), sub->begin(), sub->end());
            out = std::move(v);
          }
        }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const PermGroup& g_;
  std::map<std::tuple<int, Element, ElementSet>, std::optional<std::vector<std::pair<Element, Element>>>> memo_;
};

class PassportSearch {
 public:
  PassportSearch(const PermGroup& g, int gprime, const ScanBounds& b, ScanStats& stats)
      : g_(g), gprime_(gprime), bounds_(b), stats_(stats), completion_(g),
        actions_(class_actions(g, automorphism_group(g))) {
    budget_ = 2 * b.gmax - 2 - g.order() * (2 * gprime - 2);
  }

  std::vector<EnumeratedCover> run() {
    if (budget_ >= 0) extend(1, 0);
    return std::move(out_);
  }

 private:
  // Chooses classes with index >= first; `used` is the running sum of
  // n - n/m_j.
  void extend(int first, int used) {
    const int n = g_.order();
    for (int c = first; c < g_.class_count(); ++c) {
      int w = n - n / g_.classes()[c].element_order;
      ++stats_.multisets_visited;
      if (used + w > budget_) {
        ++stats_.multisets_pruned;
        continue;
      }
      multiset_.push_back(c);
      consider(used + w);
      extend(c, used + w);
      multiset_.pop_back();
    }
  }

  void consider(int used) {
    // 2g - 2 = n(2g'-2) + used
    int twice = g_.order() * (2 * gprime_ - 2) + used;
    if (static_cast<int>(multiset_.size()) > bounds_.max_branch_points(g_.order()))
      throw std::logic_error("branch point bound violated");
    if (twice % 2 != 0) {
      ++stats_.multisets_odd;
      return;
    }
    for (const auto& act : actions_) {
      std::vector<int> img;
      for (int c : multiset_) img.push_back(act[c]);
      std::sort(img.begin(), img.end());
      if (img < multiset_) {
        ++stats_.multisets_non_canonical;
        return;
      }
    }
    gammas_.assign(1, g_.classes()[multiset_[0]].representative);
    if (!realize(1, gammas_[0])) {
      ++stats_.multisets_unrealized;
      return;
    }
    EnumeratedCover e;
    e.vector.group = g_.id();
    e.vector.gprime = gprime_;
    e.vector.branch = gammas_;
    e.vector.hyperbolic = *hyperbolic_;
    e.passport = passport_of(g_, e.vector);
    e.signature = signature_of(g_, e.vector);
    e.genus = twice / 2 + 1;
    ++stats_.passports;
    out_.push_back(std::move(e));
  }

  // gamma_1 is the class representative (conjugating the whole vector
  // makes that possible); the rest range over their classes.
  bool realize(std::size_t i, Element prod) {
    if (i == multiset_.size()) {
      ++stats_.tuples_visited;
      ElementSet k = 0;
      for (Element x : gammas_) k |= singleton(x);
      const auto& h = completion_.find(gprime_, g_.inv(prod), g_.closure(k));
      if (!h) return false;
      hyperbolic_ = *h;
      return true;
    }
    for (Element x : set_elements(g_.classes()[multiset_[i]].members)) {
      gammas_.push_back(x);
      if (realize(i + 1, g_.mul(prod, x))) return true;
      gammas_.pop_back();
    }
    return false;
  }

  const PermGroup& g_;
  int gprime_;
  const ScanBounds& bounds_;
  ScanStats& stats_;
  CompletionSearch completion_;
  std::vector<std::vector<int>> actions_;
  int budget_ = 0;
  std::vector<int> multiset_;
  std::vector<Element> gammas_;
  std::optional<std::vector<std::pair<Element, Element>>> hyperbolic_;
  std::vector<EnumeratedCover> out_;
};

}  // namespace

std::vector<EnumeratedCover> enumerate_passports(const PermGroup& g, int gprime, const ScanBounds& bounds,
                                                 ScanStats* stats) {
  ScanStats local;
  if (g.order() > bounds.max_order) return {};
  PassportSearch search(g, gprime, bounds, local);
  auto out = search.run();
  if (stats) *stats += local;
  return out;
}

std::optional<GeneratingVector> find_etale_vector(const PermGroup& g, int gprime) {
  CompletionSearch search(g);
  const auto& h = search.find(gprime, g.identity(), 0);
  if (!h) return std::nullopt;
  return GeneratingVector{g.id(), gprime, *h, {}};
}

}  // namespace shimura
