#include "prodone/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace prodone {

namespace {

void require_same_group(Sequence const& s, Sequence const& t, char const* op) {
  if (!same_group(s.group(), t.group()))
    throw PreconditionError(std::string(op) + ": sequences live over different groups");
}

}  // namespace

Sequence::Sequence(Group g) : group_(std::move(g)), exponents_(group_->order(), 0) {}

Sequence::Sequence(Group g, std::vector<std::uint32_t> exponents)
    : group_(std::move(g)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_->order())
    throw PreconditionError("exponent vector has length " +
                            std::to_string(exponents_.size()) + ", group order is " +
                            std::to_string(group_->order()));
  length_ = std::accumulate(exponents_.begin(), exponents_.end(), std::size_t{0});
}

Sequence Sequence::from_terms(Group g, std::span<const Element> terms) {
  std::vector<std::uint32_t> e(g->order(), 0);
  for (Element t : terms) {
    if (t >= e.size())
      throw PreconditionError("element " + std::to_string(t) + " is out of range");
    ++e[t];
  }
  return Sequence(std::move(g), std::move(e));
}

Sequence Sequence::repeated(Group g, Element e, std::uint32_t k) {
  std::vector<std::uint32_t> ex(g->order(), 0);
  if (e >= ex.size())
    throw PreconditionError("element " + std::to_string(e) + " is out of range");
  ex[e] = k;
  return Sequence(std::move(g), std::move(ex));
}

std::size_t Sequence::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exponents_.begin(), exponents_.end(), [](auto v) { return v != 0; }));
}

std::vector<Element> Sequence::terms() const {
  std::vector<Element> out;
  out.reserve(length_);
  for (Element e = 0; e < exponents_.size(); ++e)
    out.insert(out.end(), exponents_[e], e);
  return out;
}

std::strong_ordering operator<=>(Sequence const& a, Sequence const& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  // Lex on sorted terms == reverse lex on exponent vectors.
  for (std::size_t i = 0; i < a.exponents_.size() && i < b.exponents_.size(); ++i)
    if (a.exponents_[i] != b.exponents_[i])
      return b.exponents_[i] <=> a.exponents_[i];
  return a.exponents_.size() <=> b.exponents_.size();
}

Sequence concat(Sequence const& s, Sequence const& t) {
  require_same_group(s, t, "concat");
  std::vector<std::uint32_t> e(s.exponents().begin(), s.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exponents()[i];
  return Sequence(s.group(), std::move(e));
}

Sequence power(Sequence const& s, std::uint32_t k) {
  std::vector<std::uint32_t> e(s.exponents().begin(), s.exponents().end());
  for (auto& v : e) v *= k;
  return Sequence(s.group(), std::move(e));
}

bool divides(Sequence const& t, Sequence const& s) {
  require_same_group(s, t, "divides");
  for (std::size_t i = 0; i < s.exponents().size(); ++i)
    if (t.exponents()[i] > s.exponents()[i]) return false;
  return true;
}

Sequence quotient(Sequence const& s, Sequence const& t) {
  if (!divides(t, s)) throw PreconditionError("quotient: divisor does not divide sequence");
  std::vector<std::uint32_t> e(s.exponents().begin(), s.exponents().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= t.exponents()[i];
  return Sequence(s.group(), std::move(e));
}

Sequence apply_map(GroupMap const& m, Sequence const& s) {
  if (!same_group(m.source, s.group()))
    throw PreconditionError("apply_map: sequence is not over the map's source group");
  std::vector<std::uint32_t> e(m.target->order(), 0);
  for (Element g = 0; g < s.exponents().size(); ++g) e[m.images[g]] += s.exponents()[g];
  return Sequence(m.target, std::move(e));
}

bool ProductSet::contains(Element e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

Element ordered_product(GroupTable const& g, std::span<const Element> terms) {
  Element p = identity_element;
  for (Element t : terms) p = g.multiply(p, t);
  return p;
}

std::uint64_t sub_multiset_count(Sequence const& s) {
  std::uint64_t total = 1;
  for (auto v : s.exponents()) {
    if (v == 0) continue;
    if (total > UINT64_MAX / (std::uint64_t{v} + 1)) return UINT64_MAX;
    total *= std::uint64_t{v} + 1;
  }
  return total;
}

SubsetLattice::SubsetLattice(Sequence const& s, Budget const& budget) : seq_(s) {
  auto const& g = *s.group();
  std::uint64_t const states = sub_multiset_count(s);
  if (states > budget.dp_states)
    throw ResourceError("product-set DP over a sequence of length " +
                            std::to_string(s.length()),
                        states, budget.dp_states);
  for (Element e = 0; e < s.exponents().size(); ++e) {
    if (s.exponents()[e] == 0) continue;
    support_.push_back(e);
    counts_.push_back(s.exponents()[e]);
  }
  weights_.resize(support_.size());
  std::size_t w = 1;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    weights_[i] = w;
    w *= counts_[i] + 1;
  }
  states_ = static_cast<std::size_t>(states);
  words_ = (g.order() + 63) / 64;
  bits_.assign(states_ * words_, 0);
  bits_[0] = 1;  // empty product

  std::vector<std::uint32_t> digit(support_.size(), 0);
  for (std::size_t st = 1; st < states_; ++st) {
    // Odometer increment.
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] <= counts_[i]) break;
      digit[i] = 0;
    }
    std::uint64_t* out = &bits_[st * words_];
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (digit[i] == 0) continue;
      std::uint64_t const* in = &bits_[(st - weights_[i]) * words_];
      Element const term = support_[i];
      for (std::size_t wd = 0; wd < words_; ++wd) {
        for (std::uint64_t m = in[wd]; m != 0; m &= m - 1) {
          Element x = static_cast<Element>(wd * 64 + static_cast<unsigned>(__builtin_ctzll(m)));
          Element y = g.multiply(x, term);
          out[y / 64] |= std::uint64_t{1} << (y % 64);
        }
      }
    }
  }
}

std::size_t SubsetLattice::state_of(Sequence const& t) const {
  if (!divides(t, seq_)) throw PreconditionError("state_of: not a sub-multiset");
  std::size_t st = 0;
  for (std::size_t i = 0; i < support_.size(); ++i)
    st += weights_[i] * t.exponents()[support_[i]];
  return st;
}

Sequence SubsetLattice::sequence_of(std::size_t state) const {
  std::vector<std::uint32_t> e(seq_.exponents().size(), 0);
  for (std::size_t i = 0; i < support_.size(); ++i)
    e[support_[i]] = static_cast<std::uint32_t>((state / weights_[i]) % (counts_[i] + 1));
  return Sequence(seq_.group(), std::move(e));
}

ProductSet SubsetLattice::products(std::size_t state) const {
  ProductSet ps;
  for (Element e = 0; e < seq_.group()->order(); ++e)
    if (reachable(state, e)) ps.members.push_back(e);
  return ps;
}

ProductSet product_set(Sequence const& s, Budget const& budget) {
  SubsetLattice lattice(s, budget);
  return lattice.products(lattice.full_state());
}

bool is_product_one(Sequence const& s, Budget const& budget) {
  if (s.group()->is_abelian()) {
    Element p = identity_element;
    for (Element e = 0; e < s.exponents().size(); ++e)
      for (std::uint32_t k = 0; k < s.exponents()[e]; ++k) p = s.group()->multiply(p, e);
    return p == identity_element;
  }
  SubsetLattice lattice(s, budget);
  return lattice.product_one(lattice.full_state());
}

std::optional<Ordering> product_one_witness(Sequence const& s, Budget const& budget) {
  SubsetLattice lattice(s, budget);
  if (!lattice.product_one(lattice.full_state())) return std::nullopt;
  auto const& g = *s.group();
  Ordering w;
  w.terms.reserve(s.length());
  std::vector<std::uint32_t> digit(lattice.radix().begin(), lattice.radix().end());
  std::size_t rest = lattice.full_state();
  Element prefix = identity_element;
  while (rest != 0) {
    bool placed = false;
    // Smallest next term whose remainder can still close the product to 1.
    for (std::size_t i = 0; i < digit.size() && !placed; ++i) {
      if (digit[i] == 0) continue;
      Element next = g.multiply(prefix, lattice.support()[i]);
      std::size_t after = rest - lattice.weights()[i];
      if (lattice.reachable(after, g.inverse(next))) {
        w.terms.push_back(lattice.support()[i]);
        prefix = next;
        rest = after;
        --digit[i];
        placed = true;
      }
    }
    if (!placed) throw Error("product_one_witness: inconsistent lattice");
  }
  return w;
}

SubMultisets::iterator::iterator(Sequence const& s)
    : group_(s.group()),
      bound_(s.exponents().begin(), s.exponents().end()),
      counts_(bound_.size(), 0),
      current_(Sequence(group_, counts_)),
      done_(false) {}

SubMultisets::iterator& SubMultisets::iterator::operator++() {
  // Lex-next among size-k sub-multisets in sorted-term order: drop terms from
  // the largest end until a larger element can replace the last dropped one,
  // then refill with the smallest available elements.
  std::size_t const n = bound_.size();
  std::size_t removed = 0;
  std::size_t capacity_above = 0;  // sum of bound_ over elements > e
  bool advanced = false;
  for (std::size_t e = n; e-- > 0;) {
    while (counts_[e] > 0) {
      --counts_[e];
      ++removed;
      if (capacity_above >= removed) {
        std::size_t need = removed;
        for (std::size_t f = e + 1; f < n && need > 0; ++f) {
          auto take = std::min<std::size_t>(bound_[f], need);
          counts_[f] = static_cast<std::uint32_t>(take);
          need -= take;
        }
        advanced = true;
        break;
      }
    }
    if (advanced) break;
    capacity_above += bound_[e];
  }
  if (!advanced) {
    // All size-k sub-multisets done; start size k+1 with the smallest one.
    std::size_t total = std::accumulate(bound_.begin(), bound_.end(), std::size_t{0});
    if (++size_ > total) {
      done_ = true;
      current_.reset();
      return *this;
    }
    std::fill(counts_.begin(), counts_.end(), 0);
    std::size_t need = size_;
    for (std::size_t f = 0; f < n && need > 0; ++f) {
      auto take = std::min<std::size_t>(bound_[f], need);
      counts_[f] = static_cast<std::uint32_t>(take);
      need -= take;
    }
  }
  current_ = Sequence(group_, counts_);
  return *this;
}

Sequence parse_sequence(Group const& g, std::string_view text) {
  std::vector<std::uint32_t> e(g->order(), 0);
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return Sequence(g);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = trim(text.substr(start, end - start));
    if (tok.empty()) throw ParseError("empty token in sequence '" + std::string(text) + "'");
    std::uint32_t mult = 1;
    std::optional<Element> elem;
    if (auto caret = tok.rfind('^'); caret != std::string_view::npos) {
      std::string_view m = tok.substr(caret + 1);
      std::uint32_t v = 0;
      auto [p, ec] = std::from_chars(m.data(), m.data() + m.size(), v);
      if (ec == std::errc{} && p == m.data() + m.size() && !m.empty()) {
        elem = g->find(tok.substr(0, caret));
        if (elem) mult = v;
      }
    }
    if (!elem) elem = g->find(tok);
    if (!elem) throw ParseError("unknown element '" + std::string(tok) + "'");
    e[*elem] += mult;
    start = end + 1;
  }
  return Sequence(g, std::move(e));
}

std::string format_sequence(Sequence const& s) {
  std::string out;
  for (Element e = 0; e < s.exponents().size(); ++e) {
    auto v = s.exponents()[e];
    if (v == 0) continue;
    if (!out.empty()) out += ',';
    out += s.group()->name(e);
    if (v > 1) out += "^" + std::to_string(v);
  }
  return out;
}

std::string format_elements(GroupTable const& g, std::span<const Element> elems,
                            std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += sep;
    out += g.name(elems[i]);
  }
  return out;
}

}  // namespace prodone
