#include "coordlat/expr.hpp"

#include <charconv>
#include <filesystem>
#include <vector>

#include "coordlat/error.hpp"
#include "coordlat/io.hpp"

namespace coordlat {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Limits& limits) : text_(text), limits_(limits) {
    std::size_t start = 0;
    while (true) {
      const std::size_t colon = text.find(':', start);
      tokens_.push_back(text.substr(start, colon == std::string_view::npos ? colon : colon - start));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
  }

  RingPtr ring() {
    const std::string_view head = next("ring constructor");
    if (head == "zmod") return make_zmod(number(), limits_.max_zmod);
    if (head == "matrix") {
      RingPtr base = ring();
      return make_matrix_ring(*base, number(), limits_.max_ring);
    }
    if (head == "product") {
      RingPtr a = ring();
      RingPtr b = ring();
      return make_product(*a, *b, limits_.max_ring);
    }
    throw UsageError("unknown ring constructor `" + std::string(head) + "` in `" + std::string(text_) + "`");
  }

  ModulePtr module() {
    const std::string_view head = next("module constructor");
    if (head == "free") {
      RingPtr r = ring();
      return make_free_module(r, number(), limits_.max_module);
    }
    throw UsageError("unknown module constructor `" + std::string(head) + "` in `" + std::string(text_) + "`");
  }

  void finish() const {
    if (pos_ != tokens_.size()) {
      throw UsageError("trailing tokens after position " + std::to_string(pos_) + " in `" + std::string(text_) + "`");
    }
  }

 private:
  std::string_view next(const char* what) {
    if (pos_ >= tokens_.size()) throw UsageError(std::string("expected ") + what + " in `" + std::string(text_) + "`");
    return tokens_[pos_++];
  }

  std::size_t number() {
    const std::string_view tok = next("a number");
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw UsageError("expected a number, got `" + std::string(tok) + "`");
    }
    return value;
  }

  std::string_view text_;
  const Limits& limits_;
  std::vector<std::string_view> tokens_;
  std::size_t pos_ = 0;
};

bool is_keyword(std::string_view text, std::initializer_list<std::string_view> words) {
  const std::string_view head = text.substr(0, text.find(':'));
  for (auto w : words) {
    if (head == w) return true;
  }
  return false;
}

Document load_path(std::string_view text) {
  const std::filesystem::path path{std::string(text)};
  if (!std::filesystem::exists(path)) {
    throw UsageError("`" + std::string(text) + "` is neither a constructor expression nor an existing file");
  }
  return load_document_file(path);
}

}  // namespace

RingPtr parse_ring_expr(std::string_view text, const Limits& limits) {
  if (is_keyword(text, {"zmod", "matrix", "product"})) {
    ExprParser p(text, limits);
    RingPtr r = p.ring();
    p.finish();
    return r;
  }
  return ring_from_document(load_path(text));
}

ModulePtr parse_module_expr(std::string_view text, const Limits& limits) {
  if (is_keyword(text, {"free"})) {
    ExprParser p(text, limits);
    ModulePtr m = p.module();
    p.finish();
    return m;
  }
  const std::filesystem::path path{std::string(text)};
  const Document doc = load_path(text);
  LoadOptions options;
  options.base_dir = path.parent_path();
  return module_from_document(doc, options);
}

}  // namespace coordlat
