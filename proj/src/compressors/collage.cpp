#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "strattr/compressors.hpp"

namespace strattr {

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::size_t sat_mul(std::size_t a, std::size_t b) {
  return (b != 0 && a > kSaturated / b) ? kSaturated : a * b;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<std::size_t> references(const CollageRule& rule) {
  return std::visit(overloaded{
                        [](const collage::Terminal&) { return std::vector<std::size_t>{}; },
                        [](const collage::Concat& c) { return std::vector<std::size_t>{c.left, c.right}; },
                        [](const collage::Power& p) { return std::vector<std::size_t>{p.base}; },
                        [](const collage::Slice& s) { return std::vector<std::size_t>{s.source}; },
                    },
                    rule.body);
}

}  // namespace

CollageSystem::CollageSystem(std::vector<CollageRule> rules, std::size_t axiom)
    : rules_(std::move(rules)), axiom_(axiom) {
  revalidate();
}

std::size_t CollageSystem::append(CollageRule rule) {
  rules_.push_back(std::move(rule));
  try {
    revalidate();
  } catch (...) {
    rules_.pop_back();
    revalidate();
    throw;
  }
  return rules_.size() - 1;
}

std::size_t CollageSystem::add_terminal(std::string name, char symbol) {
  return append({std::move(name), collage::Terminal{symbol}});
}

std::size_t CollageSystem::add_concat(std::string name, std::size_t left, std::size_t right) {
  return append({std::move(name), collage::Concat{left, right}});
}

std::size_t CollageSystem::add_power(std::string name, std::size_t base, std::size_t exponent) {
  return append({std::move(name), collage::Power{base, exponent}});
}

std::size_t CollageSystem::add_slice(std::string name, std::size_t source, std::size_t from,
                                     std::size_t to) {
  return append({std::move(name), collage::Slice{source, from, to}});
}

void CollageSystem::set_axiom(std::size_t axiom) {
  if (axiom >= rules_.size()) throw std::domain_error("axiom is not a defined nonterminal");
  axiom_ = axiom;
}

void CollageSystem::revalidate() {
  const std::size_t g = rules_.size();
  if (g == 0) return;
  if (axiom_ >= g) throw std::domain_error("axiom is not a defined nonterminal");

  // Depth-first topological sort; a back edge means a cycle.
  std::vector<int> mark(g, 0);  // 0 new, 1 on stack, 2 done
  topo_order_.clear();
  for (std::size_t root = 0; root < g; ++root) {
    if (mark[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    mark[root] = 1;
    while (!stack.empty()) {
      auto& [x, next_child] = stack.back();
      const std::vector<std::size_t> refs = references(rules_[x]);
      if (next_child < refs.size()) {
        const std::size_t y = refs[next_child++];
        if (y >= g) {
          throw std::domain_error("rule " + rules_[x].name + " references undefined nonterminal " +
                                  std::to_string(y));
        }
        if (y == x) throw std::domain_error("rule " + rules_[x].name + " references itself");
        if (mark[y] == 1) throw std::domain_error("collage system is cyclic");
        if (mark[y] == 0) {
          mark[y] = 1;
          stack.emplace_back(y, 0);
        }
      } else {
        mark[x] = 2;
        topo_order_.push_back(x);
        stack.pop_back();
      }
    }
  }

  lengths_.assign(g, 0);
  for (std::size_t x : topo_order_) {
    const CollageRule& rule = rules_[x];
    lengths_[x] = std::visit(
        overloaded{
            [](const collage::Terminal&) -> std::size_t { return 1; },
            [&](const collage::Concat& c) { return sat_add(lengths_[c.left], lengths_[c.right]); },
            [&](const collage::Power& p) -> std::size_t {
              if (p.exponent < 2) {
                throw std::domain_error("power rule " + rule.name + " needs an exponent >= 2");
              }
              return sat_mul(lengths_[p.base], p.exponent);
            },
            [&](const collage::Slice& s) -> std::size_t {
              if (s.from < 1 || s.from > s.to || s.to > lengths_[s.source]) {
                throw std::domain_error("slice rule " + rule.name + " is out of range");
              }
              return s.to - s.from + 1;
            },
        },
        rule.body);
  }
}

namespace {

// Appends exp(x)[from, to] (1-based, inclusive) to out.
void expand_range(const CollageSystem& g, std::size_t x, std::size_t from, std::size_t to,
                  std::string& out) {
  if (from > to) return;
  std::visit(overloaded{
                 [&](const collage::Terminal& t) { out.push_back(t.symbol); },
                 [&](const collage::Concat& c) {
                   const std::size_t left_len = g.expansion_length(c.left);
                   if (from <= left_len) expand_range(g, c.left, from, std::min(to, left_len), out);
                   if (to > left_len) {
                     expand_range(g, c.right, std::max(from, left_len + 1) - left_len,
                                  to - left_len, out);
                   }
                 },
                 [&](const collage::Power& p) {
                   const std::size_t base_len = g.expansion_length(p.base);
                   std::size_t pos = from;
                   while (pos <= to) {
                     const std::size_t offset = (pos - 1) % base_len + 1;
                     const std::size_t chunk_end = std::min(to - pos + offset, base_len);
                     expand_range(g, p.base, offset, chunk_end, out);
                     pos += chunk_end - offset + 1;
                   }
                 },
                 [&](const collage::Slice& s) {
                   expand_range(g, s.source, s.from + from - 1, s.from + to - 1, out);
                 },
             },
             g.rules()[x].body);
}

}  // namespace

Word collage_expand(const CollageSystem& g, std::size_t length_cap) {
  if (g.size() == 0) throw std::domain_error("empty collage system");
  const std::size_t len = g.expansion_length(g.axiom());
  check_length_cap(len, length_cap, "collage expansion");
  std::string out;
  out.reserve(len);
  expand_range(g, g.axiom(), 1, len, out);
  return Word(out);
}

std::size_t collage_size(const CollageSystem& g) { return g.size(); }

CollageSystem thue_morse_collage(std::size_t n) {
  if (n < 1) throw std::domain_error("Thue-Morse grammar needs n >= 1");
  CollageSystem g;
  std::size_t a = g.add_terminal("A0", 'a');
  std::size_t b = g.add_terminal("B0", 'b');
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t ai = g.add_concat("A" + std::to_string(i), a, b);
    const std::size_t bi = g.add_concat("B" + std::to_string(i), b, a);
    a = ai;
    b = bi;
  }
  const std::size_t axiom = g.add_concat("A" + std::to_string(n), a, b);
  g.set_axiom(axiom);
  return g;
}

Attractor attractor_from_collage(const CollageSystem& g, std::size_t length_cap) {
  if (g.size() == 0) throw std::domain_error("empty collage system");
  const std::size_t total = g.expansion_length(g.axiom());
  check_length_cap(total, length_cap, "collage expansion");

  // Leftmost start of each nonterminal in the derivation tree. Parents are
  // finalized before children when processed in reverse topological order of
  // the reachable sub-DAG.
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first(g.size(), kUnseen);
  first[g.axiom()] = 1;
  std::vector<std::size_t> order;
  {
    std::vector<int> mark(g.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{g.axiom(), 0}};
    mark[g.axiom()] = 1;
    while (!stack.empty()) {
      auto& [x, next_child] = stack.back();
      const std::vector<std::size_t> refs = references(g.rules()[x]);
      if (next_child < refs.size()) {
        const std::size_t y = refs[next_child++];
        if (mark[y] == 0) {
          mark[y] = 1;
          stack.emplace_back(y, 0);
        }
      } else {
        order.push_back(x);
        stack.pop_back();
      }
    }
    std::reverse(order.begin(), order.end());
  }

  std::vector<std::size_t> positions;
  for (std::size_t x : order) {
    const std::size_t f = first[x];
    std::visit(overloaded{
                   [&](const collage::Terminal&) { positions.push_back(f); },
                   [&](const collage::Concat& c) {
                     const std::size_t split = f + g.expansion_length(c.left);
                     positions.push_back(split);
                     first[c.left] = std::min(first[c.left], f);
                     first[c.right] = std::min(first[c.right], split);
                   },
                   [&](const collage::Power& p) {
                     positions.push_back(f + g.expansion_length(p.base));
                     first[p.base] = std::min(first[p.base], f);
                   },
                   [&](const collage::Slice&) {
                     throw std::domain_error("attractor_from_collage does not support slice rules");
                   },
               },
               g.rules()[x].body);
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return Attractor(std::move(positions), total);
}

}  // namespace strattr
