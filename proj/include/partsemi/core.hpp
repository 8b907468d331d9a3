// partsemi - finite transformation semigroups preserving a set partition
//
// Ground data model: transformations of {0, ..., n - 1}, set partitions of
// the same ground set, and partition shapes. Internal indexing is 0-based;
// every text format read or written here is 1-based.

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace partsemi {

  using point_type = std::uint32_t;

  //! Base class of every exception thrown by partsemi.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed text input.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  //! An operation was called outside the set it is defined on, e.g. the
  //! character of a map that does not preserve the partition.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! Two arguments live on ground sets of different size.
  class SizeMismatch : public Error {
   public:
    using Error::Error;
  };

  namespace detail {

    inline std::string_view trim(std::string_view s) {
      auto const is_space = [](char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
      };
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto const pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
          out.push_back(s.substr(start));
          return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
      }
    }

    // Parses a positive decimal integer; the whole token must be digits.
    inline std::size_t parse_positive(std::string_view token,
                                      std::string_view what) {
      auto const t = trim(token);
      std::size_t value = 0;
      auto const [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
      if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()
          || value == 0) {
        throw ParseError("malformed " + std::string(what) + " token '"
                         + std::string(token) + "'");
      }
      return value;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  //! A total selfmap of {0, ..., n - 1}, stored as its image table: entry x
  //! is the image of x.
  class Transformation {
   public:
    Transformation() = default;

    explicit Transformation(std::vector<point_type> images)
        : _images(std::move(images)) {
      if (_images.empty()) {
        throw DomainError("a transformation needs a nonempty ground set");
      }
      for (auto y : _images) {
        if (y >= _images.size()) {
          throw DomainError("image " + std::to_string(y)
                            + " out of range for degree "
                            + std::to_string(_images.size()));
        }
      }
    }

    Transformation(std::initializer_list<point_type> images)
        : Transformation(std::vector<point_type>(images)) {}

    static Transformation identity(std::size_t n) {
      std::vector<point_type> img(n);
      std::iota(img.begin(), img.end(), point_type(0));
      return Transformation(std::move(img));
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    [[nodiscard]] point_type operator[](std::size_t x) const {
      return _images[x];
    }

    [[nodiscard]] std::span<point_type const> images() const noexcept {
      return _images;
    }

    [[nodiscard]] bool is_permutation() const {
      std::vector<bool> seen(degree(), false);
      for (auto y : _images) {
        if (seen[y]) {
          return false;
        }
        seen[y] = true;
      }
      return true;
    }

    //! Inverse of a permutation; throws DomainError otherwise.
    [[nodiscard]] Transformation inverse() const {
      if (!is_permutation()) {
        throw DomainError("only a permutation has an inverse");
      }
      std::vector<point_type> inv(degree());
      for (std::size_t x = 0; x < degree(); ++x) {
        inv[_images[x]] = static_cast<point_type>(x);
      }
      return Transformation(std::move(inv));
    }

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend auto operator<=>(Transformation const&, Transformation const&)
        = default;

   private:
    std::vector<point_type> _images;
  };

  //! Left-to-right composition: x(fg) = (xf)g.
  inline Transformation compose(Transformation const& f,
                                Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw SizeMismatch("cannot compose maps of degree "
                         + std::to_string(f.degree()) + " and "
                         + std::to_string(g.degree()));
    }
    std::vector<point_type> img(f.degree());
    for (std::size_t x = 0; x < f.degree(); ++x) {
      img[x] = g[f[x]];
    }
    return Transformation(std::move(img));
  }

  //! The image set Xf, ascending.
  inline std::vector<point_type> image_set(Transformation const& f) {
    std::vector<bool> hit(f.degree(), false);
    for (auto y : f.images()) {
      hit[y] = true;
    }
    std::vector<point_type> out;
    for (std::size_t y = 0; y < hit.size(); ++y) {
      if (hit[y]) {
        out.push_back(static_cast<point_type>(y));
      }
    }
    return out;
  }

  inline std::size_t rank(Transformation const& f) {
    return image_set(f).size();
  }

  //! Parses n whitespace-separated 1-based images, e.g. "2 1 1".
  inline Transformation parse_transformation(std::string_view text,
                                             std::size_t      n) {
    std::vector<point_type> img;
    std::istringstream      in{std::string(text)};
    std::string             token;
    while (in >> token) {
      auto const v = detail::parse_positive(token, "image");
      if (v > n) {
        throw ParseError("image " + token + " out of range 1.."
                         + std::to_string(n));
      }
      img.push_back(static_cast<point_type>(v - 1));
    }
    if (img.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " images, got "
                       + std::to_string(img.size()));
    }
    return Transformation(std::move(img));
  }

  //! 1-based, space separated; inverse of parse_transformation.
  inline std::string format_transformation(Transformation const& f) {
    std::string out;
    for (std::size_t x = 0; x < f.degree(); ++x) {
      if (x != 0) {
        out += ' ';
      }
      out += std::to_string(f[x] + 1);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  //! A set partition of {0, ..., n - 1} in canonical form: blocks ordered by
  //! their least element, each block ascending. Block indices everywhere in
  //! the library refer to this order.
  class Partition {
   public:
    Partition() = default;

    //! Validates and canonicalizes; the blocks may come in any order.
    explicit Partition(std::vector<std::vector<point_type>> blocks) {
      std::size_t n = 0;
      for (auto& b : blocks) {
        if (b.empty()) {
          throw DomainError("empty block");
        }
        std::sort(b.begin(), b.end());
        n += b.size();
      }
      if (n == 0) {
        throw DomainError("a partition needs a nonempty ground set");
      }
      std::sort(blocks.begin(), blocks.end(),
                [](auto const& a, auto const& b) { return a[0] < b[0]; });
      _block_of.assign(n, no_block);
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (auto x : blocks[i]) {
          if (x >= n) {
            throw DomainError("element " + std::to_string(x)
                              + " outside ground set of size "
                              + std::to_string(n));
          }
          if (_block_of[x] != no_block) {
            throw DomainError("element " + std::to_string(x)
                              + " appears twice");
          }
          _block_of[x] = i;
        }
      }
      _blocks = std::move(blocks);
    }

    //! The partition with restricted growth string `rgs`: element x lies in
    //! block rgs[x]. rgs[0] must be 0 and rgs[x] <= 1 + max(rgs[0..x)).
    static Partition from_rgs(std::span<std::size_t const> rgs) {
      std::vector<std::vector<point_type>> blocks;
      for (std::size_t x = 0; x < rgs.size(); ++x) {
        if (rgs[x] > blocks.size()) {
          throw DomainError("not a restricted growth string");
        }
        if (rgs[x] == blocks.size()) {
          blocks.emplace_back();
        }
        blocks[rgs[x]].push_back(static_cast<point_type>(x));
      }
      return Partition(std::move(blocks));
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _block_of.size();
    }

    [[nodiscard]] std::size_t number_of_blocks() const noexcept {
      return _blocks.size();
    }

    [[nodiscard]] std::vector<point_type> const& block(std::size_t i) const {
      return _blocks[i];
    }

    [[nodiscard]] std::size_t block_size(std::size_t i) const {
      return _blocks[i].size();
    }

    [[nodiscard]] std::size_t block_of(point_type x) const {
      return _block_of[x];
    }

    [[nodiscard]] std::vector<std::vector<point_type>> const&
    blocks() const noexcept {
      return _blocks;
    }

    [[nodiscard]] std::size_t smallest_block_size() const {
      std::size_t s = degree();
      for (auto const& b : _blocks) {
        s = std::min(s, b.size());
      }
      return s;
    }

    friend bool operator==(Partition const& a, Partition const& b) {
      return a._blocks == b._blocks;
    }

   private:
    static constexpr std::size_t         no_block = static_cast<std::size_t>(-1);
    std::vector<std::vector<point_type>> _blocks;
    std::vector<std::size_t>             _block_of;
  };

  //! Parses "1|2,3|4,5,6": blocks separated by '|', 1-based elements
  //! separated by ','. The elements must be exactly 1..n for some n.
  inline Partition parse_partition(std::string_view text) {
    std::vector<std::vector<point_type>> blocks;
    std::vector<std::size_t>             seen;
    for (auto const block_text : detail::split(text, '|')) {
      if (detail::trim(block_text).empty()) {
        throw ParseError("empty block in partition '" + std::string(text)
                         + "'");
      }
      auto& block = blocks.emplace_back();
      for (auto const token : detail::split(block_text, ',')) {
        auto const v = detail::parse_positive(token, "element");
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) {
          throw ParseError("element " + std::to_string(v) + " appears twice");
        }
        seen.push_back(v);
        block.push_back(static_cast<point_type>(v - 1));
      }
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t k = 0; k < seen.size(); ++k) {
      if (seen[k] != k + 1) {
        throw ParseError("element " + std::to_string(k + 1)
                         + " is missing (elements must be 1.."
                         + std::to_string(seen.back()) + ")");
      }
    }
    return Partition(std::move(blocks));
  }

  inline std::string format_partition(Partition const& p) {
    std::string out;
    for (std::size_t i = 0; i < p.number_of_blocks(); ++i) {
      if (i != 0) {
        out += '|';
      }
      auto const& b = p.block(i);
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (k != 0) {
          out += ',';
        }
        out += std::to_string(b[k] + 1);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PartitionShape / SubShape
  ////////////////////////////////////////////////////////////////////////

  struct ShapePart {
    std::size_t size;          // block size n_i
    std::size_t multiplicity;  // m_i, number of blocks of that size

    friend bool operator==(ShapePart const&, ShapePart const&) = default;
  };

  //! The signature of a partition: distinct block sizes n_1 < ... < n_k, each
  //! with its multiplicity m_i >= 1.
  class PartitionShape {
   public:
    PartitionShape() = default;

    explicit PartitionShape(std::vector<ShapePart> parts)
        : _parts(std::move(parts)) {
      if (_parts.empty()) {
        throw DomainError("a shape needs at least one block size");
      }
      for (std::size_t i = 0; i < _parts.size(); ++i) {
        if (_parts[i].size == 0 || _parts[i].multiplicity == 0) {
          throw DomainError("block sizes and multiplicities must be positive");
        }
        if (i > 0 && _parts[i - 1].size >= _parts[i].size) {
          throw DomainError("block sizes must be strictly increasing");
        }
      }
    }

    //! m blocks of size q.
    static PartitionShape uniform(std::size_t m, std::size_t q) {
      return PartitionShape({ShapePart{q, m}});
    }

    [[nodiscard]] std::vector<ShapePart> const& parts() const noexcept {
      return _parts;
    }

    //! k, the number of distinct block sizes.
    [[nodiscard]] std::size_t number_of_sizes() const noexcept {
      return _parts.size();
    }

    [[nodiscard]] ShapePart const& operator[](std::size_t i) const {
      return _parts[i];
    }

    //! m = sum of m_i.
    [[nodiscard]] std::size_t number_of_blocks() const noexcept {
      std::size_t m = 0;
      for (auto const& p : _parts) {
        m += p.multiplicity;
      }
      return m;
    }

    //! n = sum of m_i * n_i.
    [[nodiscard]] std::size_t degree() const noexcept {
      std::size_t n = 0;
      for (auto const& p : _parts) {
        n += p.multiplicity * p.size;
      }
      return n;
    }

    [[nodiscard]] bool is_uniform() const noexcept {
      return _parts.size() == 1;
    }

    friend bool operator==(PartitionShape const&, PartitionShape const&)
        = default;

   private:
    std::vector<ShapePart> _parts;
  };

  inline PartitionShape shape_of(Partition const& p) {
    std::vector<std::size_t> sizes;
    for (auto const& b : p.blocks()) {
      sizes.push_back(b.size());
    }
    std::sort(sizes.begin(), sizes.end());
    std::vector<ShapePart> parts;
    for (auto s : sizes) {
      if (!parts.empty() && parts.back().size == s) {
        ++parts.back().multiplicity;
      } else {
        parts.push_back({s, 1});
      }
    }
    return PartitionShape(std::move(parts));
  }

  //! A canonical partition realising `shape`: consecutive runs of elements,
  //! smallest blocks first.
  inline Partition partition_of_shape(PartitionShape const& shape) {
    std::vector<std::vector<point_type>> blocks;
    point_type                           next = 0;
    for (auto const& part : shape.parts()) {
      for (std::size_t c = 0; c < part.multiplicity; ++c) {
        auto& b = blocks.emplace_back();
        for (std::size_t k = 0; k < part.size; ++k) {
          b.push_back(next++);
        }
      }
    }
    return Partition(std::move(blocks));
  }

  //! Parses "1^2,2^1": two blocks of size 1 and one block of size 2. Parts
  //! may come in any order but sizes must be distinct; "3" means "3^1".
  inline PartitionShape parse_shape(std::string_view text) {
    std::vector<ShapePart> parts;
    for (auto const token : detail::split(text, ',')) {
      auto const caret = token.find('^');
      ShapePart  part{};
      if (caret == std::string_view::npos) {
        part = {detail::parse_positive(token, "shape"), 1};
      } else {
        part = {detail::parse_positive(token.substr(0, caret), "shape"),
                detail::parse_positive(token.substr(caret + 1), "shape")};
      }
      for (auto const& q : parts) {
        if (q.size == part.size) {
          throw ParseError("block size " + std::to_string(part.size)
                           + " listed twice in shape '" + std::string(text)
                           + "'");
        }
      }
      parts.push_back(part);
    }
    std::sort(parts.begin(), parts.end(),
              [](auto const& a, auto const& b) { return a.size < b.size; });
    return PartitionShape(std::move(parts));
  }

  inline std::string format_shape(PartitionShape const& shape) {
    std::string out;
    for (auto const& part : shape.parts()) {
      if (!out.empty()) {
        out += ',';
      }
      out += std::to_string(part.size) + '^'
             + std::to_string(part.multiplicity);
    }
    return out;
  }

  //! Block counts (r_1, ..., r_k) of a subpartition, indexed like the parts
  //! of the ambient shape.
  struct SubShape {
    std::vector<std::size_t> counts;

    [[nodiscard]] std::size_t total() const noexcept {
      return std::accumulate(counts.begin(), counts.end(), std::size_t(0));
    }

    friend bool operator==(SubShape const&, SubShape const&) = default;
    friend auto operator<=>(SubShape const&, SubShape const&) = default;
  };

  //! True iff 0 <= r_i <= m_i for all i, r >= 1, and r_1 >= 1 (the
  //! subpartition contains a smallest block).
  inline bool is_valid_subshape(PartitionShape const& shape,
                                SubShape const&       sub) {
    if (sub.counts.size() != shape.number_of_sizes()) {
      return false;
    }
    for (std::size_t i = 0; i < sub.counts.size(); ++i) {
      if (sub.counts[i] > shape[i].multiplicity) {
        return false;
      }
    }
    return sub.counts[0] >= 1;
  }

}  // namespace partsemi
