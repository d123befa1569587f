#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

/// Byte string identifying an isomorphism class: equal codes iff isomorphic graphs.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  int vertex_count() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes_) {
      out += kDigits[c >> 4];
      out += kDigits[c & 15];
    }
    return out;
  }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept { return std::hash<std::string>{}(c.bytes()); }
};

inline constexpr int kCanonicalMaxVertices = kMaxVertices;

namespace detail {

// Ordered partition of vertex positions. cell_len[p] is meaningful only where p starts a cell.
struct OrderedPartition {
  std::array<std::uint8_t, kMaxVertices> lab{};
  std::array<std::uint8_t, kMaxVertices> cell_len{};
  int n = 0;
  int cells = 0;
};

class Canonicalizer {
 public:
  Canonicalizer(int n, const VertexMask* adj) : n_(n), adj_(adj) {}

  CanonicalCode run() {
    OrderedPartition p;
    p.n = n_;
    for (int i = 0; i < n_; ++i) p.lab[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    if (n_ > 0) {
      p.cell_len[0] = static_cast<std::uint8_t>(n_);
      p.cells = 1;
      splitters_.clear();
      splitters_.push_back(all_mask());
      refine(p);
    }
    search(p, 0);
    return encode();
  }

 private:
  VertexMask all_mask() const { return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1; }

  void refine(OrderedPartition& p) {
    std::array<int, kMaxVertices> key{};
    while (!splitters_.empty() && p.cells < n_) {
      const VertexMask w = splitters_.back();
      splitters_.pop_back();
      for (int s = 0; s < n_;) {
        const int len = p.cell_len[static_cast<std::size_t>(s)];
        if (len > 1) {
          bool uniform = true;
          for (int i = 0; i < len; ++i) {
            key[static_cast<std::size_t>(i)] = std::popcount(adj_[p.lab[static_cast<std::size_t>(s + i)]] & w);
            if (key[static_cast<std::size_t>(i)] != key[0]) uniform = false;
          }
          if (!uniform) split_cell(p, s, len, key);
        }
        s += len;
      }
    }
    splitters_.clear();
  }

  // Sorts the cell at s by key (ascending) and splits it into runs of equal key.
  void split_cell(OrderedPartition& p, int s, int len, std::array<int, kMaxVertices>& key) {
    for (int i = 1; i < len; ++i) {
      const int k = key[static_cast<std::size_t>(i)];
      const auto v = p.lab[static_cast<std::size_t>(s + i)];
      int j = i - 1;
      while (j >= 0 && key[static_cast<std::size_t>(j)] > k) {
        key[static_cast<std::size_t>(j + 1)] = key[static_cast<std::size_t>(j)];
        p.lab[static_cast<std::size_t>(s + j + 1)] = p.lab[static_cast<std::size_t>(s + j)];
        --j;
      }
      key[static_cast<std::size_t>(j + 1)] = k;
      p.lab[static_cast<std::size_t>(s + j + 1)] = v;
    }
    int start = 0;
    for (int i = 1; i <= len; ++i) {
      if (i == len || key[static_cast<std::size_t>(i)] != key[static_cast<std::size_t>(start)]) {
        p.cell_len[static_cast<std::size_t>(s + start)] = static_cast<std::uint8_t>(i - start);
        VertexMask m = 0;
        for (int t = start; t < i; ++t) m |= VertexMask{1} << p.lab[static_cast<std::size_t>(s + t)];
        splitters_.push_back(m);
        if (start != 0) ++p.cells;
        start = i;
      }
    }
  }

  void search(const OrderedPartition& p, int depth) {
    if (p.cells == n_) {
      leaf(p);
      return;
    }
    // Target: first non-singleton cell of maximum size.
    int target = -1, best_len = 1;
    for (int s = 0; s < n_;) {
      const int len = p.cell_len[static_cast<std::size_t>(s)];
      if (len > best_len) {
        best_len = len;
        target = s;
      }
      s += len;
    }
    std::array<std::uint8_t, kMaxVertices> cell{};
    for (int i = 0; i < best_len; ++i) cell[static_cast<std::size_t>(i)] = p.lab[static_cast<std::size_t>(target + i)];
    std::sort(cell.begin(), cell.begin() + best_len);

    std::vector<int> explored;
    for (int i = 0; i < best_len; ++i) {
      const int v = cell[static_cast<std::size_t>(i)];
      if (!explored.empty() && same_orbit_as_explored(depth, v, explored)) continue;
      explored.push_back(v);

      OrderedPartition child = p;
      int pos = target;
      while (child.lab[static_cast<std::size_t>(pos)] != v) ++pos;
      std::swap(child.lab[static_cast<std::size_t>(pos)], child.lab[static_cast<std::size_t>(target)]);
      child.cell_len[static_cast<std::size_t>(target)] = 1;
      child.cell_len[static_cast<std::size_t>(target + 1)] = static_cast<std::uint8_t>(best_len - 1);
      ++child.cells;
      splitters_.clear();
      splitters_.push_back(VertexMask{1} << v);
      refine(child);

      if (prefix_.size() <= static_cast<std::size_t>(depth)) prefix_.resize(static_cast<std::size_t>(depth) + 1);
      prefix_[static_cast<std::size_t>(depth)] = v;
      search(child, depth + 1);
    }
  }

  // Orbit test under the automorphisms found so far that fix the current prefix pointwise.
  bool same_orbit_as_explored(int depth, int v, const std::vector<int>& explored) const {
    std::array<std::uint8_t, kMaxVertices> parent{};
    for (int i = 0; i < n_; ++i) parent[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[parent[static_cast<std::size_t>(x)]];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) {
        const int u = prefix_[static_cast<std::size_t>(d)];
        fixes = gamma[static_cast<std::size_t>(u)] == u;
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x), b = find(gamma[static_cast<std::size_t>(x)]);
        if (a != b) parent[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
      }
    }
    if (!any) return false;
    const int rv = find(v);
    for (int e : explored)
      if (find(e) == rv) return true;
    return false;
  }

  void leaf(const OrderedPartition& p) {
    std::array<std::uint8_t, kMaxVertices> pos_of{};
    for (int i = 0; i < n_; ++i) pos_of[p.lab[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    std::vector<VertexMask> rows(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      VertexMask row = 0;
      for (VertexMask nb = adj_[p.lab[static_cast<std::size_t>(i)]]; nb != 0; nb &= nb - 1) {
        row |= VertexMask{1} << pos_of[static_cast<std::size_t>(std::countr_zero(nb))];
      }
      rows[static_cast<std::size_t>(i)] = row;
    }
    if (!have_best_) {
      have_best_ = true;
      best_rows_ = rows;
      best_lab_ = p.lab;
      first_rows_ = rows;
      first_lab_ = p.lab;
      return;
    }
    if (rows == first_rows_) {
      record_automorphism(first_lab_, p.lab);
      return;
    }
    if (rows == best_rows_) {
      record_automorphism(best_lab_, p.lab);
      return;
    }
    if (rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_lab_ = p.lab;
    }
  }

  void record_automorphism(const std::array<std::uint8_t, kMaxVertices>& from,
                           const std::array<std::uint8_t, kMaxVertices>& to) {
    if (automorphisms_.size() >= 256) return;
    std::array<std::uint8_t, kMaxVertices> gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[static_cast<std::size_t>(i)]] = to[static_cast<std::size_t>(i)];
    automorphisms_.push_back(gamma);
  }

  CanonicalCode encode() const {
    const int row_bytes = (n_ + 7) / 8;
    std::string bytes;
    bytes.reserve(1 + static_cast<std::size_t>(n_ * row_bytes));
    bytes.push_back(static_cast<char>(n_));
    for (VertexMask row : best_rows_) {
      for (int b = row_bytes - 1; b >= 0; --b) bytes.push_back(static_cast<char>((row >> (8 * b)) & 0xFF));
    }
    return CanonicalCode(std::move(bytes));
  }

  int n_;
  const VertexMask* adj_;
  std::vector<VertexMask> splitters_;
  std::vector<int> prefix_;
  std::vector<std::array<std::uint8_t, kMaxVertices>> automorphisms_;
  bool have_best_ = false;
  std::vector<VertexMask> best_rows_, first_rows_;
  std::array<std::uint8_t, kMaxVertices> best_lab_{}, first_lab_{};
};

}  // namespace detail

/// Canonical code computed from raw symmetric adjacency masks.
inline CanonicalCode canonical_code(int n, const VertexMask* adj) {
  if (n > kCanonicalMaxVertices) {
    throw Error(Errc::SizeLimitExceeded, "canonical code limited to " + std::to_string(kCanonicalMaxVertices) +
                                             " vertices, got " + std::to_string(n));
  }
  return detail::Canonicalizer(n, adj).run();
}

inline CanonicalCode canonical_code(const MolGraph& g) { return canonical_code(g.vertex_count(), g.masks().data()); }

/// Rebuilds the canonical representative (vertices in canonical order) from a code.
inline MolGraph graph_from_code(const CanonicalCode& code) {
  const auto& b = code.bytes();
  const int n = code.vertex_count();
  const int row_bytes = (n + 7) / 8;
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    VertexMask row = 0;
    for (int k = 0; k < row_bytes; ++k) {
      row = (row << 8) | static_cast<unsigned char>(b[static_cast<std::size_t>(1 + i * row_bytes + k)]);
    }
    rows[static_cast<std::size_t>(i)] = row;
  }
  return MolGraph::from_masks(n, rows.data());
}

}  // namespace sombor
