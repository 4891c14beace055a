#include "twogroups/presentation.hpp"

#include <cctype>
#include <charconv>

#include "twogroups/common.hpp"

namespace twogroups {

Word parse_word(std::string_view text, const std::vector<std::string>& generators) {
  Word w;
  std::size_t i = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '*'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j]) && text[j] != '^') ++j;
    const std::string_view name = text.substr(i, j - i);
    long long exponent = 1;
    if (j < text.size() && text[j] == '^') {
      std::size_t k = j + 1;
      while (k < text.size() && !is_sep(text[k])) ++k;
      const std::string_view num = text.substr(j + 1, k - j - 1);
      auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), exponent);
      if (ec != std::errc() || ptr != num.data() + num.size())
        throw StructuralError("bad exponent in word: " + std::string(text));
      j = k;
    }
    i = j;
    if (name == "1" && exponent == 1) continue;
    std::size_t g = generators.size();
    for (std::size_t k = 0; k < generators.size(); ++k)
      if (generators[k] == name) g = k;
    if (g == generators.size()) throw StructuralError("unknown generator '" + std::string(name) + "'");
    const int letter = static_cast<int>(g + 1) * (exponent < 0 ? -1 : 1);
    for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) w.push_back(letter);
  }
  return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& generators) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += generators[static_cast<std::size_t>(std::abs(w[i])) - 1];
    if (w[i] < 0) s += "^-1";
  }
  return s;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t evaluate(const Word& w, const Group& g, const std::vector<std::size_t>& images) {
  std::size_t acc = g.unit();
  for (int l : w) {
    const std::size_t x = images[static_cast<std::size_t>(std::abs(l)) - 1];
    acc = g.mul(acc, l > 0 ? x : g.inverse(x));
  }
  return acc;
}

namespace {

class Enumerator {
 public:
  Enumerator(std::size_t columns, std::size_t max_cosets) : cols_(columns), max_(max_cosets) {
    add_row();
  }

  bool overflow() const { return overflow_; }
  bool live(std::size_t c) const { return parent_[c] == c; }
  std::size_t rows() const { return table_.size(); }
  std::size_t get(std::size_t c, std::size_t x) const { return table_[c][x]; }

  bool define(std::size_t c, std::size_t x) {
    if (table_.size() >= max_) {
      overflow_ = true;
      return false;
    }
    const std::size_t n = add_row();
    set(c, x, n);
    return true;
  }

  void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
    if (w.empty()) return;
    std::size_t f = c, b = c;
    std::size_t i = 0, j = w.size() - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] != kNone) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][w[j] ^ 1] != kNone) {
        b = table_[b][w[j] ^ 1];
        if (j == 0) {
          coincidence(f, b);
          return;
        }
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        return;
      }
      if (!define(f, w[i])) return;
    }
  }

  CosetTable compact() const {
    std::vector<std::size_t> number(table_.size(), kNone);
    std::size_t n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) number[c] = n++;
    CosetTable t;
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      std::vector<std::size_t> row;
      for (std::size_t x = 0; x < cols_; ++x) row.push_back(number[table_[c][x]]);
      t.table.push_back(std::move(row));
    }
    return t;
  }

 private:
  std::size_t add_row() {
    table_.emplace_back(cols_, kNone);
    parent_.push_back(parent_.size());
    return table_.size() - 1;
  }
  void set(std::size_t c, std::size_t x, std::size_t d) {
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
  }
  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::size_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }
  void merge(std::size_t a, std::size_t b, std::vector<std::size_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }
  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t g = queue[q];
      for (std::size_t x = 0; x < cols_; ++x) {
        const std::size_t d = table_[g][x];
        if (d == kNone) continue;
        table_[d][x ^ 1] = kNone;
        const std::size_t mu = rep(g), nu = rep(d);
        if (table_[mu][x] != kNone) {
          merge(nu, table_[mu][x], queue);
        } else if (table_[nu][x ^ 1] != kNone) {
          merge(mu, table_[nu][x ^ 1], queue);
        } else {
          table_[mu][x] = nu;
          table_[nu][x ^ 1] = mu;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t max_;
  bool overflow_ = false;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> parent_;
};

}  // namespace

std::optional<CosetTable> todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  const std::size_t cols = 2 * p.generators.size();
  std::vector<std::vector<std::size_t>> relators;
  for (const Word& w : p.relators) {
    std::vector<std::size_t> r;
    for (int l : w) r.push_back(2 * (static_cast<std::size_t>(std::abs(l)) - 1) + (l < 0 ? 1 : 0));
    relators.push_back(std::move(r));
  }
  Enumerator e(cols, max_cosets);
  for (std::size_t c = 0; c < e.rows(); ++c) {
    for (const auto& r : relators) {
      if (!e.live(c)) break;
      e.scan_and_fill(c, r);
      if (e.overflow()) return std::nullopt;
    }
    for (std::size_t x = 0; x < cols && e.live(c); ++x)
      if (e.get(c, x) == kNone && !e.define(c, x)) return std::nullopt;
  }
  return e.compact();
}

}  // namespace twogroups
