#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace webmain::dom {

enum class NodeType { Element, Text };

struct Attr {
  std::string name;   // lowercase
  std::string value;  // raw string, entities decoded
};

// Value-semantic node; children are held by value so trees copy deeply and
// are immutable-friendly (nothing mutates a tree after construction).
struct Node {
  NodeType type = NodeType::Element;
  std::string tag;   // lowercase; empty for text nodes
  std::vector<Attr> attrs;
  std::string text;  // payload for text nodes
  std::vector<Node> children;

  bool is_element() const { return type == NodeType::Element; }
  bool is_text() const { return type == NodeType::Text; }
  const std::string* attr(std::string_view name) const;
  bool has_attr(std::string_view name) const { return attr(name) != nullptr; }
};

struct DomTree {
  Node root;  // always an <html> element after parse_html
};

// Root-to-node child indices.
using NodePath = std::vector<int>;

struct UndecodableInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Error-tolerant parse: implied tags, tag-soup recovery, unquoted attributes,
// rawtext elements, entity decoding. Tag names and attribute names are
// lowercased. Comments, doctype and processing instructions are dropped.
DomTree parse_html(std::string_view bytes,
                   const std::optional<std::string>& encoding_hint = std::nullopt);

// serialize(t) re-parses to a tree structurally equal to t. Attributes are
// emitted in stored order; no pretty-printing.
std::string serialize(const DomTree& tree);
std::string serialize_node(const Node& node);

// nullptr when any step is out of range or descends into a text node.
const Node* resolve(const DomTree& tree, const NodePath& path);
const Node* resolve(const Node& root, const NodePath& path);

// Tag names, attribute multisets, text payloads and child order.
bool structurally_equal(const Node& a, const Node& b);

struct ContainmentReport {
  bool ok = false;
  std::vector<std::string> violations;  // first 10 candidate paths that fail to embed
};

// True iff `candidate` can be obtained from `original` by deleting nodes
// (ordered tree inclusion): injective mapping preserving tag, attributes,
// whitespace-collapsed text, document order and ancestor relations.
ContainmentReport is_subtree(const DomTree& candidate, const DomTree& original);

// Concatenated text of all descendant text nodes, raw.
std::string text_content(const Node& node);
// Rendered text: skips script/style/etc., inserts '\n' at block boundaries,
// collapses whitespace inside lines.
std::string visible_text(const Node& node);
// visible_text collapsed to a single line (whitespace runs -> single space).
std::string visible_text_flat(const Node& node);

// Tag classification shared by the chunker, formatter and text extraction.
bool is_void_tag(std::string_view tag);
bool is_rawtext_tag(std::string_view tag);
bool is_invisible_tag(std::string_view tag);   // script/style/template/...
bool is_block_tag(std::string_view tag);       // induces a line break
std::string path_to_string(const NodePath& path);

}  // namespace webmain::dom
