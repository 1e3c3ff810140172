#include "camplet/models/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace camplet::models {

struct Element::Node {
  Kind kind = Kind::Unit;
  std::string label;
  std::shared_ptr<const Node> first;
  std::shared_ptr<const Node> second;
  std::vector<Row> rows;
};

namespace {
const std::shared_ptr<const Element::Node>& unit_node() {
  static const auto node = std::make_shared<const Element::Node>();
  return node;
}
}  // namespace

Element::Element() : node_(unit_node()) {}
Element::Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Element Element::unit() { return Element(); }

Element Element::atom(std::string label) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->label = std::move(label);
  return Element(std::move(node));
}

Element Element::pair(Element first, Element second) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pair;
  node->first = std::move(first.node_);
  node->second = std::move(second.node_);
  return Element(std::move(node));
}

Element Element::table(std::vector<Row> rows) {
  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i - 1].first == rows[i].first)
      throw std::invalid_argument("table element with duplicate key: " +
                                  rows[i].first.show());
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Table;
  node->rows = std::move(rows);
  return Element(std::move(node));
}

Element::Kind Element::kind() const { return node_->kind; }

const std::string& Element::label() const {
  if (kind() != Kind::Atom) throw std::logic_error("label() on non-atom");
  return node_->label;
}

Element Element::first() const {
  if (kind() != Kind::Pair) throw std::logic_error("first() on non-pair");
  return Element(node_->first);
}

Element Element::second() const {
  if (kind() != Kind::Pair) throw std::logic_error("second() on non-pair");
  return Element(node_->second);
}

const std::vector<Element::Row>& Element::rows() const {
  if (kind() != Kind::Table) throw std::logic_error("rows() on non-table");
  return node_->rows;
}

std::optional<Element> Element::apply(const Element& key) const {
  if (kind() != Kind::Table) return std::nullopt;
  for (const Row& row : node_->rows)
    if (row.first == key) return row.second;
  return std::nullopt;
}

std::strong_ordering Element::operator<=>(const Element& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  auto rank = [](Kind k) {
    switch (k) {
      case Kind::Unit: return 0;
      case Kind::Atom: return 1;
      case Kind::Pair: return 2;
      case Kind::Table: return 3;
    }
    return 4;
  };
  if (auto c = rank(kind()) <=> rank(other.kind()); c != 0) return c;
  switch (kind()) {
    case Kind::Unit:
      return std::strong_ordering::equal;
    case Kind::Atom:
      return node_->label <=> other.node_->label;
    case Kind::Pair: {
      Element a(node_->first), b(other.node_->first);
      if (auto c = a <=> b; c != 0) return c;
      return Element(node_->second) <=> Element(other.node_->second);
    }
    case Kind::Table: {
      const auto& xs = node_->rows;
      const auto& ys = other.node_->rows;
      const std::size_t n = std::min(xs.size(), ys.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (auto c = xs[i].first <=> ys[i].first; c != 0) return c;
        if (auto c = xs[i].second <=> ys[i].second; c != 0) return c;
      }
      return xs.size() <=> ys.size();
    }
  }
  return std::strong_ordering::equal;
}

bool Element::operator==(const Element& other) const {
  return (*this <=> other) == 0;
}

std::string Element::show() const {
  switch (kind()) {
    case Kind::Unit:
      return "*";
    case Kind::Atom:
      return node_->label;
    case Kind::Pair:
      return "(" + Element(node_->first).show() + "," +
             Element(node_->second).show() + ")";
    case Kind::Table: {
      std::string out = "{";
      bool sep = false;
      for (const Row& row : node_->rows) {
        if (sep) out += ",";
        sep = true;
        out += row.first.show() + "->" + row.second.show();
      }
      return out + "}";
    }
  }
  return "?";
}

FinSetObj::FinSetObj(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool FinSetObj::contains(const Element& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::size_t FinSetObj::index_of(const Element& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || !(*it == e))
    throw std::invalid_argument("element not in set: " + e.show());
  return static_cast<std::size_t>(it - elements_.begin());
}

std::string FinSetObj::show() const {
  std::string out = "{";
  bool sep = false;
  for (const Element& e : elements_) {
    if (sep) out += ",";
    sep = true;
    out += e.show();
  }
  return out + "}";
}

FinFun::FinFun(FinSetObj dom, FinSetObj cod, std::vector<Element> images)
    : dom_(std::move(dom)), cod_(std::move(cod)), images_(std::move(images)) {
  if (images_.size() != dom_.size())
    throw std::invalid_argument("non-total function table: " +
                                std::to_string(images_.size()) + " images for " +
                                std::to_string(dom_.size()) + " domain elements");
  for (const Element& img : images_) {
    if (!cod_.contains(img))
      throw std::invalid_argument("image outside codomain: " + img.show() +
                                  " not in " + cod_.show());
  }
}

FinFun FinFun::identity(const FinSetObj& obj) {
  return FinFun(obj, obj, obj.elements());
}

const Element& FinFun::operator()(const Element& x) const {
  return images_[dom_.index_of(x)];
}

FinFun FinFun::then(const FinFun& next) const {
  if (!(cod_ == next.dom_))
    throw std::invalid_argument("composition endpoint mismatch: " +
                                cod_.show() + " vs " + next.dom_.show());
  std::vector<Element> images;
  images.reserve(images_.size());
  for (const Element& img : images_) images.push_back(next(img));
  return FinFun(dom_, next.cod_, std::move(images));
}

Element FinFun::as_table() const {
  std::vector<Element::Row> rows;
  rows.reserve(dom_.size());
  for (std::size_t i = 0; i < dom_.size(); ++i)
    rows.emplace_back(dom_.elements()[i], images_[i]);
  return Element::table(std::move(rows));
}

FinFun FinFun::from_table(const FinSetObj& dom, const FinSetObj& cod,
                          const Element& table) {
  return FinFun::from_fn(dom, cod, [&](const Element& x) {
    auto img = table.apply(x);
    if (!img)
      throw std::invalid_argument("table missing key " + x.show() + ": " +
                                  table.show());
    return *img;
  });
}

std::string FinFun::show() const {
  std::string out = "[";
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (i) out += ",";
    out += dom_.elements()[i].show() + "->" + images_[i].show();
  }
  return out + "]";
}

EnumerationCapExceeded::EnumerationCapExceeded(std::size_t requested_,
                                               std::size_t cap_)
    : requested(requested_), cap(cap_) {
  message = "hom-set enumeration of size " + std::to_string(requested) +
            " exceeds cap " + std::to_string(cap);
}

std::vector<FinFun> enumerate_functions(const FinSetObj& dom,
                                        const FinSetObj& cod,
                                        std::size_t cap) {
  const std::size_t n = dom.size();
  const std::size_t k = cod.size();
  // |cod|^|dom|, watching for overflow against the cap.
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (k == 0) {
      total = 0;
      break;
    }
    if (total > cap / k + 1) throw EnumerationCapExceeded(cap + 1, cap);
    total *= k;
  }
  if (total > cap) throw EnumerationCapExceeded(total, cap);
  if (k == 0 && n > 0) return {};  // no maps into the empty set

  std::vector<FinFun> out;
  out.reserve(total);
  std::vector<std::size_t> odometer(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<Element> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      images.push_back(cod.elements()[odometer[i]]);
    out.emplace_back(dom, cod, std::move(images));
    for (std::size_t i = n; i-- > 0;) {
      if (++odometer[i] < k) break;
      odometer[i] = 0;
    }
  }
  return out;
}

}  // namespace camplet::models
