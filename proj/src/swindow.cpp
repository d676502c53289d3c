#include "iquot/swindow.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "iquot/errors.hpp"

namespace iquot {

std::vector<std::pair<int, int>> SubsemigroupWindow::overflow_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (product_at(i, j) == kNoProduct) out.emplace_back(i, j);
    }
  }
  return out;
}

ReillyElement SubsemigroupWindow::ambient_product(int i, int j) const {
  return multiply(*ambient, elements[i].underlying, elements[j].underlying);
}

int SubsemigroupWindow::find_underlying(const ReillyElement& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e,
                             [](const SElement& a, const ReillyElement& b) {
                               return a.underlying < b;
                             });
  if (it == elements.end() || !(it->underlying == e)) return -1;
  return static_cast<int>(it - elements.begin());
}

int SubsemigroupWindow::find_id(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (elements[i].id == id) return i;
  }
  return -1;
}

SubsemigroupWindow close_generators(const std::vector<ReillyElement>& generators,
                                    std::shared_ptr<const ReillyContext> ambient,
                                    Window window) {
  const int n_bound = window.bound;
  const int order = ambient->group.order;
  for (const ReillyElement& g : generators) {
    if (g.m < 0 || g.n < 0 || g.g < 0 || g.g >= order) {
      throw validation_error("generator " + element_id(*ambient, g) + " is not a valid element");
    }
    if (g.m > n_bound || g.n > n_bound) {
      throw validation_error("generator " + element_id(*ambient, g) + " outside window N=" +
                             std::to_string(n_bound));
    }
  }

  const std::size_t cap =
      static_cast<std::size_t>(n_bound + 1) * static_cast<std::size_t>(n_bound + 1) * order;

  std::vector<ReillyElement> elems;
  std::set<ReillyElement> seen;
  for (const ReillyElement& g : generators) {
    if (seen.insert(g).second) elems.push_back(g);
  }
  // Worklist closure: when an element is processed it is paired, both ways,
  // with everything discovered so far; later discoveries pick up the pair
  // with this element when they are processed themselves.
  std::size_t head = 0;
  while (head < elems.size()) {
    const ReillyElement e = elems[head++];
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const ReillyElement other = elems[j];
      for (const auto& [a, b] : {std::pair{e, other}, std::pair{other, e}}) {
        const ReillyElement p = multiply(*ambient, a, b);
        if (p.m > n_bound || p.n > n_bound) continue;
        if (seen.insert(p).second) {
          elems.push_back(p);
          if (elems.size() > cap) {
            throw std::logic_error("closure exceeded the (N+1)^2*|G| element cap");
          }
        }
      }
    }
  }

  std::sort(elems.begin(), elems.end());

  SubsemigroupWindow s;
  s.mode = SubMode::reference;
  s.window = window;
  s.ambient = std::move(ambient);
  s.elements.reserve(elems.size());
  for (const ReillyElement& e : elems) {
    s.elements.push_back({element_id(*s.ambient, e), {e.m, e.n}, e});
  }
  const int n = s.size();
  s.product.assign(static_cast<std::size_t>(n) * n, kNoProduct);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const ReillyElement p = s.ambient_product(i, j);
      if (p.m <= n_bound && p.n <= n_bound) {
        s.product[i * n + j] = s.find_underlying(p);
      }
    }
  }
  for (const ReillyElement& g : generators) {
    const int idx = s.find_underlying(g);
    if (std::find(s.generators.begin(), s.generators.end(), idx) == s.generators.end()) {
      s.generators.push_back(idx);
    }
  }
  std::sort(s.generators.begin(), s.generators.end());
  return s;
}

SubsemigroupWindow load_abstract(const std::vector<AbstractElementSpec>& elements,
                                 const std::vector<AbstractProductSpec>& products,
                                 Window window) {
  SubsemigroupWindow s;
  s.mode = SubMode::abstract_table;
  s.window = window;

  std::vector<AbstractElementSpec> sorted = elements;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.label < b.label; });
  std::map<std::string, int> index;
  for (const AbstractElementSpec& e : sorted) {
    if (e.profile.r < 0 || e.profile.l < 0) {
      throw validation_error("element '" + e.label + "' has a negative profile index");
    }
    if (!s.in_window(e.profile)) {
      throw validation_error("element '" + e.label + "' has profile outside window N=" +
                             std::to_string(window.bound));
    }
    if (!index.emplace(e.label, s.size()).second) {
      throw validation_error("duplicate element label '" + e.label + "'");
    }
    s.elements.push_back({e.label, e.profile, {}});
  }

  const int n = s.size();
  s.product.assign(static_cast<std::size_t>(n) * n, kNoProduct);
  std::set<std::pair<int, int>> declared;
  for (const AbstractProductSpec& p : products) {
    auto li = index.find(p.left);
    if (li == index.end()) throw validation_error("undeclared element '" + p.left + "' in product");
    auto ri = index.find(p.right);
    if (ri == index.end()) {
      throw validation_error("undeclared element '" + p.right + "' in product");
    }
    if (!declared.emplace(li->second, ri->second).second) {
      throw validation_error("duplicate product entry " + p.left + "*" + p.right);
    }
    if (p.overflow) continue;
    auto wi = index.find(p.result);
    if (wi == index.end()) {
      throw validation_error("undeclared element '" + p.result + "' in product");
    }
    const IndexProfile expected =
        profile_multiply(s.profile(li->second), s.profile(ri->second));
    if (!(s.profile(wi->second) == expected)) {
      throw validation_error(
          "profile mismatch at (" + p.left + "," + p.right + "): profiles multiply to (" +
          std::to_string(expected.r) + "," + std::to_string(expected.l) + ") but " + p.result +
          " has profile (" + std::to_string(s.profile(wi->second).r) + "," +
          std::to_string(s.profile(wi->second).l) + ")");
    }
    s.product[li->second * n + ri->second] = wi->second;
  }
  return s;
}

std::vector<int> l_class_coverage(const SubsemigroupWindow& s, Window window) {
  std::set<int> covered;
  for (const SElement& e : s.elements) {
    if (e.profile.l <= window.bound) covered.insert(e.profile.l);
  }
  return {covered.begin(), covered.end()};
}

}  // namespace iquot
