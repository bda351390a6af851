#include "bv/io.hpp"

#include <cctype>
#include <memory>

#include "bv/common.hpp"
#include "json.hpp"

namespace bv {

std::string format(const Forest& f) {
  ForestWord w = f.to_word();
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += 'l' + std::to_string(w[i]);
  }
  return out;
}

std::string format(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += 's' + std::to_string(w[i].index);
    if (w[i].sign < 0) out += '\'';
  }
  return out;
}

std::string format(const MonoidElt& x) {
  std::string f = x.forest.trivial() ? std::string{} : format(x.forest);
  std::string b = format(x.braid);
  if (f.empty() && b.empty()) return "1";
  if (f.empty()) return b;
  if (b.empty()) return f;
  return f + ' ' + b;
}

std::string format(const FractionTriple& t) {
  return format(MonoidElt{t.num, t.braid}) + " / " + format(t.den);
}

namespace {

struct Token {
  enum Kind { Lambda, Sigma, One, Inv, Slash, LParen, RParen, End } kind;
  uint32_t index = 0;
  int8_t sign = 1;
  size_t pos = 0;
};

[[noreturn]] void fail(const std::string& what, size_t pos) {
  throw parse_error(what + " at position " + std::to_string(pos));
}

struct Lexer {
  const std::string& text;
  size_t pos = 0;
  Token cur;

  explicit Lexer(const std::string& t) : text(t) { advance(); }

  void advance() { cur = scan(); }

  Token scan() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    size_t at = pos;
    if (pos >= text.size()) return {Token::End, 0, 1, at};
    char c = text[pos];
    if (c == '/') { ++pos; return {Token::Slash, 0, 1, at}; }
    if (c == '(') { ++pos; return {Token::LParen, 0, 1, at}; }
    if (c == ')') { ++pos; return {Token::RParen, 0, 1, at}; }
    if (c == '1') { ++pos; return {Token::One, 0, 1, at}; }
    if (c == 'i') {
      if (text.compare(pos, 3, "inv") == 0) {
        pos += 3;
        return {Token::Inv, 0, 1, at};
      }
      fail("unexpected 'i'", at);
    }
    if (c == 'l' || c == 's') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail(std::string("expected index after '") + c + "'", at);
      uint64_t v = 0;
      bool over = false;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (!over) {
          v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
          if (v >> 32) over = true;
        }
        ++pos;
      }
      if (over) fail("index out of range", at);
      if (c == 'l') return {Token::Lambda, static_cast<uint32_t>(v), 1, at};
      int8_t sg = 1;
      if (pos < text.size() && text[pos] == '\'') {
        ++pos;
        sg = -1;
      }
      return {Token::Sigma, static_cast<uint32_t>(v), sg, at};
    }
    fail(std::string("unexpected character '") + c + "'", at);
  }
};

struct ProductNode;

struct AtomNode {
  enum Kind { Gen, One, Paren, Invp } kind = One;
  Token gen;
  std::unique_ptr<ProductNode> sub;
};

struct ProductNode {
  std::vector<AtomNode> atoms;
};

bool has_inv(const ProductNode& p) {
  for (const auto& a : p.atoms) {
    if (a.kind == AtomNode::Invp) return true;
    if (a.sub && has_inv(*a.sub)) return true;
  }
  return false;
}

ProductNode parse_product(Lexer& lx) {
  ProductNode p;
  for (;;) {
    const Token& t = lx.cur;
    switch (t.kind) {
      case Token::Lambda:
      case Token::Sigma: {
        AtomNode a;
        a.kind = AtomNode::Gen;
        a.gen = t;
        p.atoms.push_back(std::move(a));
        lx.advance();
        break;
      }
      case Token::One: {
        p.atoms.push_back({AtomNode::One, {}, nullptr});
        lx.advance();
        break;
      }
      case Token::LParen:
      case Token::Inv: {
        AtomNode a;
        a.kind = t.kind == Token::Inv ? AtomNode::Invp : AtomNode::Paren;
        size_t at = t.pos;
        lx.advance();
        if (a.kind == AtomNode::Invp) {
          if (lx.cur.kind != Token::LParen) fail("expected '(' after inv", lx.cur.pos);
          lx.advance();
        }
        a.sub = std::make_unique<ProductNode>(parse_product(lx));
        if (lx.cur.kind != Token::RParen) fail("unclosed '('", at);
        lx.advance();
        p.atoms.push_back(std::move(a));
        break;
      }
      default:
        if (p.atoms.empty()) fail("empty element", t.pos);
        return p;
    }
  }
}

MonoidElt eval_mono(const ProductNode& p) {
  MonoidElt acc{Forest{}, {}};
  for (const auto& a : p.atoms) {
    switch (a.kind) {
      case AtomNode::Gen:
        if (a.gen.kind == Token::Lambda)
          acc = mono_mul(acc, {Forest::lambda(a.gen.index), {}});
        else
          acc = mono_mul(acc, {Forest{}, {sig(a.gen.index, a.gen.sign)}});
        break;
      case AtomNode::One:
        break;
      case AtomNode::Paren:
        acc = mono_mul(acc, eval_mono(*a.sub));
        break;
      case AtomNode::Invp:
        throw error("eval_mono: inv in monoid word");
    }
  }
  return acc;
}

FractionTriple eval_frac(const ProductNode& p, Flavor fl) {
  if (!has_inv(p)) return embed_mono(eval_mono(p), fl);
  FractionTriple acc = frac_identity(fl);
  for (const auto& a : p.atoms) {
    switch (a.kind) {
      case AtomNode::Gen:
        if (a.gen.kind == Token::Lambda)
          acc = frac_mul(acc, embed_forest(Forest::lambda(a.gen.index), fl));
        else
          acc = frac_mul(acc, embed_braid({sig(a.gen.index, a.gen.sign)}, fl));
        break;
      case AtomNode::One:
        break;
      case AtomNode::Paren:
        acc = frac_mul(acc, eval_frac(*a.sub, fl));
        break;
      case AtomNode::Invp:
        acc = frac_mul(acc, frac_inv(eval_frac(*a.sub, fl)));
        break;
    }
  }
  return acc;
}

}  // namespace

FractionTriple parse_element(const std::string& text, Flavor flavor) {
  Lexer lx(text);
  ProductNode lhs = parse_product(lx);
  std::unique_ptr<ProductNode> rhs;
  if (lx.cur.kind == Token::Slash) {
    lx.advance();
    rhs = std::make_unique<ProductNode>(parse_product(lx));
  }
  if (lx.cur.kind != Token::End)
    fail(lx.cur.kind == Token::Slash ? "second top-level '/'" : "trailing input",
         lx.cur.pos);

  if (!has_inv(lhs) && (!rhs || !has_inv(*rhs))) {
    MonoidElt n = eval_mono(lhs);
    MonoidElt d = rhs ? eval_mono(*rhs) : MonoidElt{Forest{}, {}};
    return frac_new(n, d, flavor);
  }
  FractionTriple v = eval_frac(lhs, flavor);
  if (rhs) v = frac_mul(v, frac_inv(eval_frac(*rhs, flavor)));
  return v;
}

std::string to_json(const FractionTriple& t) {
  nlohmann::json j;
  j["F"] = t.num.to_word();
  auto alpha = nlohmann::json::array();
  for (const auto& l : t.braid)
    alpha.push_back({l.index, static_cast<int>(l.sign)});
  j["alpha"] = std::move(alpha);
  j["G"] = t.den.to_word();
  j["flavor"] = t.flavor == Flavor::Braided ? "B" : "S";
  j["normalized"] = t.normalized;
  return j.dump();
}

FractionTriple triple_from_json(const std::string& text) {
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    FractionTriple t;
    t.num = Forest::from_word(j.at("F").get<ForestWord>());
    t.den = Forest::from_word(j.at("G").get<ForestWord>());
    for (const auto& l : j.at("alpha")) {
      uint32_t idx = l.at(0).get<uint32_t>();
      int sg = l.at(1).get<int>();
      if (sg != 1 && sg != -1) throw parse_error("bad crossing sign in json");
      t.braid.push_back(sig(idx, sg));
    }
    std::string fl = j.at("flavor").get<std::string>();
    if (fl != "B" && fl != "S") throw parse_error("bad flavor in json");
    t.flavor = fl == "B" ? Flavor::Braided : Flavor::Symmetric;
    t.normalized = j.at("normalized").get<bool>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("bad json: ") + e.what());
  }
}

}  // namespace bv
