#pragma once

#include <compare>
#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace camplet::models {

/// A value of the finite-set universe. Elements are immutable trees built
/// from four constructors:
///
///   * unit          -- the single inhabitant of the tensor unit
///   * atom(label)   -- a named generator
///   * pair(a, b)    -- an element of a product
///   * table(rows)   -- an element of a function space, rows sorted by key
///
/// The total order is: unit < atom < pair < table, atoms by label,
/// pairs and tables lexicographically. Equality is structural, so two
/// routes that build the same value compare equal.
class Element {
 public:
  enum class Kind { Unit, Atom, Pair, Table };

  using Row = std::pair<Element, Element>;

  Element();  // unit

  static Element unit();
  static Element atom(std::string label);
  static Element pair(Element first, Element second);
  // Rows are sorted by key on construction; duplicate keys are rejected.
  static Element table(std::vector<Row> rows);

  Kind kind() const;
  const std::string& label() const;           // Atom only
  Element first() const;                      // Pair only
  Element second() const;                     // Pair only
  const std::vector<Row>& rows() const;       // Table only

  // Looks up a key in a table element.
  std::optional<Element> apply(const Element& key) const;

  bool operator==(const Element& other) const;
  std::strong_ordering operator<=>(const Element& other) const;

  std::string show() const;

 private:
  struct Node;
  explicit Element(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// A finite set: a canonically sorted, duplicate-free list of elements.
class FinSetObj {
 public:
  FinSetObj() = default;
  explicit FinSetObj(std::vector<Element> elements);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Element& e) const;
  // Index of an element in the canonical order; throws if absent.
  std::size_t index_of(const Element& e) const;

  bool operator==(const FinSetObj& other) const = default;
  std::strong_ordering operator<=>(const FinSetObj& other) const = default;

  std::string show() const;

 private:
  std::vector<Element> elements_;
};

/// A total function between finite sets, stored as the image list aligned
/// with the domain's canonical element order. Construction validates
/// totality and that every image lies in the codomain.
class FinFun {
 public:
  FinFun() = default;
  FinFun(FinSetObj dom, FinSetObj cod, std::vector<Element> images);

  // Builds the function from a callable evaluated on each domain element.
  template <typename F>
  static FinFun from_fn(FinSetObj dom, FinSetObj cod, F&& fn) {
    std::vector<Element> images;
    images.reserve(dom.size());
    for (const Element& x : dom.elements()) images.push_back(fn(x));
    return FinFun(std::move(dom), std::move(cod), std::move(images));
  }

  static FinFun identity(const FinSetObj& obj);

  const FinSetObj& dom() const { return dom_; }
  const FinSetObj& cod() const { return cod_; }

  const Element& operator()(const Element& x) const;

  // Diagram-order composition: first this, then next.
  FinFun then(const FinFun& next) const;

  // Element-of-a-function-space view of this function.
  Element as_table() const;
  static FinFun from_table(const FinSetObj& dom, const FinSetObj& cod,
                           const Element& table);

  bool operator==(const FinFun& other) const = default;

  std::string show() const;

 private:
  FinSetObj dom_;
  FinSetObj cod_;
  std::vector<Element> images_;
};

/// Thrown when a hom-set enumeration would exceed the configured cap.
struct EnumerationCapExceeded : std::exception {
  std::size_t requested = 0;
  std::size_t cap = 0;
  std::string message;
  EnumerationCapExceeded(std::size_t requested, std::size_t cap);
  const char* what() const noexcept override { return message.c_str(); }
};

inline constexpr std::size_t kDefaultHomCap = 4096;

/// All total functions dom -> cod in canonical (lexicographic) order.
/// Throws EnumerationCapExceeded if |cod|^|dom| exceeds the cap.
std::vector<FinFun> enumerate_functions(const FinSetObj& dom,
                                        const FinSetObj& cod,
                                        std::size_t cap = kDefaultHomCap);

}  // namespace camplet::models
