#include "zimt/catalogue.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace zimt::catalogue {

extern const char* const kDefaultCatalogueJson;  // defined in generated catalogue_data.cpp

// ---------------------------------------------------------------------------
// Tiny arithmetic / condition grammar over the record parameters.

namespace {

struct ExprNode {
    enum class Op {
        Const, Var, Add, Sub, Mul, Div, Mod, Neg,
        Eq, Ne, Le, Ge, Lt, Gt, And, Or, Not, True, False
    };
    Op op = Op::Const;
    Int value = 0;
    std::string var;
    std::shared_ptr<const ExprNode> a, b;
};
using NodePtr = std::shared_ptr<const ExprNode>;

using Env = std::map<std::string, Int>;

Int eval_int(const ExprNode& n, const Env& env);

bool eval_bool(const ExprNode& n, const Env& env) {
    using Op = ExprNode::Op;
    switch (n.op) {
        case Op::True: return true;
        case Op::False: return false;
        case Op::Not: return !eval_bool(*n.a, env);
        case Op::And: return eval_bool(*n.a, env) && eval_bool(*n.b, env);
        case Op::Or: return eval_bool(*n.a, env) || eval_bool(*n.b, env);
        case Op::Eq: return eval_int(*n.a, env) == eval_int(*n.b, env);
        case Op::Ne: return eval_int(*n.a, env) != eval_int(*n.b, env);
        case Op::Le: return eval_int(*n.a, env) <= eval_int(*n.b, env);
        case Op::Ge: return eval_int(*n.a, env) >= eval_int(*n.b, env);
        case Op::Lt: return eval_int(*n.a, env) < eval_int(*n.b, env);
        case Op::Gt: return eval_int(*n.a, env) > eval_int(*n.b, env);
        default: throw DomainError("expression is not a condition");
    }
}

Int eval_int(const ExprNode& n, const Env& env) {
    using Op = ExprNode::Op;
    switch (n.op) {
        case Op::Const: return n.value;
        case Op::Var: {
            auto it = env.find(n.var);
            if (it == env.end()) throw DomainError("unbound parameter '" + n.var + "'");
            return it->second;
        }
        case Op::Neg: return -eval_int(*n.a, env);
        case Op::Add: return eval_int(*n.a, env) + eval_int(*n.b, env);
        case Op::Sub: return eval_int(*n.a, env) - eval_int(*n.b, env);
        case Op::Mul: return eval_int(*n.a, env) * eval_int(*n.b, env);
        case Op::Div: {
            Int d = eval_int(*n.b, env);
            if (d == 0) throw DomainError("division by zero in catalogue expression");
            return eval_int(*n.a, env) / d;
        }
        case Op::Mod: {
            Int d = eval_int(*n.b, env);
            if (d == 0) throw DomainError("modulo by zero in catalogue expression");
            return eval_int(*n.a, env) % d;
        }
        default: throw DomainError("expression is not arithmetic");
    }
}

class ExprParser {
  public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    NodePtr parse_int() {
        NodePtr n = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return n;
    }

    NodePtr parse_bool() {
        NodePtr n = bool_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return n;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw DomainError("expression '" + std::string(s_) + "' at offset " +
                          std::to_string(pos_) + ": " + what);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    static NodePtr mk(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    NodePtr expr() {
        NodePtr n = term();
        for (;;) {
            if (eat("+")) n = mk({ExprNode::Op::Add, 0, {}, n, term()});
            else if (eat("-")) n = mk({ExprNode::Op::Sub, 0, {}, n, term()});
            else return n;
        }
    }
    NodePtr term() {
        NodePtr n = unary();
        for (;;) {
            if (eat("*")) n = mk({ExprNode::Op::Mul, 0, {}, n, unary()});
            else if (eat("/")) n = mk({ExprNode::Op::Div, 0, {}, n, unary()});
            else if (eat("%")) n = mk({ExprNode::Op::Mod, 0, {}, n, unary()});
            else return n;
        }
    }
    NodePtr unary() {
        if (eat("-")) return mk({ExprNode::Op::Neg, 0, {}, unary(), nullptr});
        return atom();
    }
    NodePtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected integer, parameter, or '('");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
            return mk({ExprNode::Op::Const, v, {}, nullptr, nullptr});
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
                name += s_[pos_++];
            return mk({ExprNode::Op::Var, 0, name, nullptr, nullptr});
        }
        if (eat("(")) {
            NodePtr n = expr();
            if (!eat(")")) fail("expected ')'");
            return n;
        }
        fail("unexpected character");
    }

    // clause ( ('&&'|'||') clause )*, no boolean parentheses
    NodePtr bool_expr() {
        NodePtr n = clause();
        for (;;) {
            if (eat("&&")) n = mk({ExprNode::Op::And, 0, {}, n, clause()});
            else if (eat("||")) n = mk({ExprNode::Op::Or, 0, {}, n, clause()});
            else return n;
        }
    }
    NodePtr clause() {
        skip_ws();
        if (eat("!")) return mk({ExprNode::Op::Not, 0, {}, clause(), nullptr});
        std::size_t save = pos_;
        if (eat("true")) {
            if (pos_ >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_])))
                return mk({ExprNode::Op::True, 0, {}, nullptr, nullptr});
            pos_ = save;
        }
        save = pos_;
        if (eat("false")) {
            if (pos_ >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_])))
                return mk({ExprNode::Op::False, 0, {}, nullptr, nullptr});
            pos_ = save;
        }
        NodePtr lhs = expr();
        ExprNode::Op op;
        if (eat("==")) op = ExprNode::Op::Eq;
        else if (eat("!=")) op = ExprNode::Op::Ne;
        else if (eat("<=")) op = ExprNode::Op::Le;
        else if (eat(">=")) op = ExprNode::Op::Ge;
        else if (eat("<")) op = ExprNode::Op::Lt;
        else if (eat(">")) op = ExprNode::Op::Gt;
        else fail("expected comparison operator");
        return mk({op, 0, {}, lhs, expr()});
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Piecewise record payloads.

struct PiecewiseExpr {
    struct TypeBranch {
        NodePtr cond;
        rootkit::TypeLabel label;
        NodePtr rank;
    };
    struct MultBranch {
        NodePtr cond;
        std::vector<std::pair<std::string, NodePtr>> classes;
    };
    struct ValueBranch {
        NodePtr cond;
        NodePtr value;
    };
    std::vector<NodePtr> constraints;
    std::vector<TypeBranch> type_branches;
    std::vector<MultBranch> mult_branches;
    std::vector<ValueBranch> value_branches;
};

// ---------------------------------------------------------------------------
// Families and specs.

const std::vector<Family>& all_families() {
    static const std::vector<Family> order = {
        Family::SL_C, Family::Sp_C, Family::SO_C,  Family::SL_H, Family::SOplus,
        Family::SU,   Family::Sp_pq, Family::SOstar, Family::E6,  Family::E7,
        Family::E8,   Family::F4,   Family::G2,    Family::EII};
    return order;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::SL_C: return "SL_C";
        case Family::Sp_C: return "Sp_C";
        case Family::SO_C: return "SO_C";
        case Family::SL_H: return "SL_H";
        case Family::SOplus: return "SO+";
        case Family::SU: return "SU";
        case Family::Sp_pq: return "Sp";
        case Family::SOstar: return "SO*";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
        case Family::EII: return "EII";
    }
    return "?";
}

static std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : all_families())
        if (family_name(f) == s) return f;
    return std::nullopt;
}

std::string to_string(const GroupSpec& spec) {
    std::ostringstream os;
    switch (spec.family) {
        case Family::SL_C: os << "SL(" << spec.params[0] << ",C)"; break;
        case Family::Sp_C: os << "Sp(" << 2 * spec.params[0] << ",C)"; break;
        case Family::SO_C: os << "SO(" << spec.params[0] << ",C)"; break;
        case Family::SL_H: os << "SL(" << spec.params[0] << ",H)"; break;
        case Family::SOplus: os << "SO+(" << spec.params[0] << "," << spec.params[1] << ")"; break;
        case Family::SU: os << "SU(" << spec.params[0] << "," << spec.params[1] << ")"; break;
        case Family::Sp_pq: os << "Sp(" << spec.params[0] << "," << spec.params[1] << ")"; break;
        case Family::SOstar: os << "SO*(" << 2 * spec.params[0] << ")"; break;
        case Family::E6: os << "E6"; break;
        case Family::E7: os << "E7"; break;
        case Family::E8: os << "E8"; break;
        case Family::F4: os << "F4"; break;
        case Family::G2: os << "G2"; break;
        case Family::EII: os << "EII"; break;
    }
    return os.str();
}

namespace {

struct SpecToken {
    enum class Kind { Word, Int, LParen, RParen, Comma, End };
    Kind kind;
    std::string word;
    Int value = 0;
    std::size_t offset = 0;
};

std::vector<SpecToken> lex_spec(std::string_view text) {
    std::vector<SpecToken> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string w;
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
                w += static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
            // E6/E7/E8/F4/G2 carry a digit; SO+/SO* carry a sign character.
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) && w.size() == 1 &&
                (w == "E" || w == "F" || w == "G"))
                w += text[i++];
            if (i < text.size() && (text[i] == '+' || text[i] == '*') && w == "SO") w += text[i++];
            out.push_back({SpecToken::Kind::Word, w, 0, start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            out.push_back({SpecToken::Kind::Int, {}, v, start});
            continue;
        }
        if (c == '(') {
            out.push_back({SpecToken::Kind::LParen, {}, 0, start});
            ++i;
            continue;
        }
        if (c == ')') {
            out.push_back({SpecToken::Kind::RParen, {}, 0, start});
            ++i;
            continue;
        }
        if (c == ',') {
            out.push_back({SpecToken::Kind::Comma, {}, 0, start});
            ++i;
            continue;
        }
        throw SpecParseError(SpecParseError::Kind::Syntax, start, {"letter", "digit", "(", ")", ","},
                             "unexpected character '" + std::string(1, c) + "' at offset " +
                                 std::to_string(start));
    }
    out.push_back({SpecToken::Kind::End, {}, 0, text.size()});
    return out;
}

[[noreturn]] void range_error(std::size_t offset, const std::string& what) {
    throw SpecParseError(SpecParseError::Kind::RangeViolation, offset, {}, what);
}

}  // namespace

std::optional<std::string> validity_violation(const GroupSpec& s) {
    auto need = [&](bool ok, const char* msg) -> std::optional<std::string> {
        if (!ok) return std::string(msg);
        return std::nullopt;
    };
    switch (s.family) {
        case Family::SL_C: return need(s.params[0] >= 3, "SL(n,C) requires n >= 3");
        case Family::Sp_C: return need(s.params[0] >= 2, "Sp(2n,C) requires n >= 2");
        case Family::SO_C: return need(s.params[0] >= 5, "SO(n,C) requires n >= 5");
        case Family::SL_H: return need(s.params[0] >= 3, "SL(n,H) requires n >= 3");
        case Family::SOplus:
            return need(s.params[0] >= s.params[1] && s.params[1] >= 2,
                        "SO+(m,n) requires m >= n >= 2");
        case Family::SU:
            return need(s.params[0] >= s.params[1] && s.params[1] >= 2,
                        "SU(m,n) requires m >= n >= 2");
        case Family::Sp_pq:
            return need(s.params[0] >= s.params[1] && s.params[1] >= 2,
                        "Sp(m,n) requires m >= n >= 2");
        case Family::SOstar: return need(s.params[0] >= 4, "SO*(2n) requires n >= 4");
        default: return std::nullopt;
    }
}

bool spec_valid(const GroupSpec& spec) { return !validity_violation(spec).has_value(); }

GroupSpec parse_group_spec(std::string_view text) {
    auto toks = lex_spec(text);
    std::size_t t = 0;
    auto peek = [&]() -> const SpecToken& { return toks[t]; };
    auto next = [&]() -> const SpecToken& { return toks[t++]; };

    static const std::vector<std::string> kFamilies = {"SL", "SU", "SO", "SO+", "SO*", "SP",
                                                       "E6", "E7", "E8", "F4", "G2", "EII"};
    if (peek().kind != SpecToken::Kind::Word)
        throw SpecParseError(SpecParseError::Kind::Syntax, peek().offset, kFamilies,
                             "expected a group family name");
    const SpecToken head = next();
    const std::string& fam = head.word;
    if (std::find(kFamilies.begin(), kFamilies.end(), fam) == kFamilies.end())
        throw SpecParseError(SpecParseError::Kind::UnknownFamily, head.offset, kFamilies,
                             "unknown group family '" + fam + "'");

    // Argument list: ints and field letters C / H.
    struct Arg {
        bool is_int;
        Int value;
        std::string word;
        std::size_t offset;
    };
    std::vector<Arg> args;
    if (peek().kind == SpecToken::Kind::LParen) {
        next();
        for (;;) {
            const SpecToken& a = next();
            if (a.kind == SpecToken::Kind::Int) args.push_back({true, a.value, {}, a.offset});
            else if (a.kind == SpecToken::Kind::Word) args.push_back({false, 0, a.word, a.offset});
            else
                throw SpecParseError(SpecParseError::Kind::Syntax, a.offset, {"integer", "C", "H"},
                                     "expected an argument");
            const SpecToken& sep = next();
            if (sep.kind == SpecToken::Kind::RParen) break;
            if (sep.kind != SpecToken::Kind::Comma)
                throw SpecParseError(SpecParseError::Kind::Syntax, sep.offset, {",", ")"},
                                     "expected ',' or ')'");
        }
    }
    if (peek().kind != SpecToken::Kind::End)
        throw SpecParseError(SpecParseError::Kind::Syntax, peek().offset, {"end of input"},
                             "trailing input after group spec");

    auto arity_error = [&](const std::string& what) -> void {
        throw SpecParseError(SpecParseError::Kind::ArityMismatch, head.offset, {}, what);
    };
    auto int_arg = [&](std::size_t i) -> Int {
        if (!args[i].is_int)
            throw SpecParseError(SpecParseError::Kind::Syntax, args[i].offset, {"integer"},
                                 "expected an integer argument");
        return args[i].value;
    };

    GroupSpec spec;
    if (fam == "SL") {
        if (args.size() != 2 || args[1].is_int)
            arity_error("SL takes (n,C) or (n,H)");
        Int n = int_arg(0);
        if (args[1].word == "C") spec = {Family::SL_C, {n}};
        else if (args[1].word == "H") spec = {Family::SL_H, {n}};
        else
            throw SpecParseError(SpecParseError::Kind::Syntax, args[1].offset, {"C", "H"},
                                 "SL field must be C or H");
    } else if (fam == "SU") {
        if (args.size() != 2 || !args[0].is_int || !args[1].is_int) arity_error("SU takes (m,n)");
        spec = {Family::SU, {int_arg(0), int_arg(1)}};
    } else if (fam == "SO") {
        if (args.size() != 2 || args[1].is_int || args[1].word != "C")
            arity_error("SO takes (n,C); did you mean SO+(m,n) or SO*(2n)?");
        spec = {Family::SO_C, {int_arg(0)}};
    } else if (fam == "SO+") {
        if (args.size() != 2 || !args[0].is_int || !args[1].is_int) arity_error("SO+ takes (m,n)");
        spec = {Family::SOplus, {int_arg(0), int_arg(1)}};
    } else if (fam == "SO*") {
        if (args.size() != 1 || !args[0].is_int) arity_error("SO* takes (2n)");
        Int k = int_arg(0);
        if (k % 2 != 0) range_error(args[0].offset, "SO*(2n) requires an even argument");
        spec = {Family::SOstar, {k / 2}};
    } else if (fam == "SP") {
        if (args.size() != 2) arity_error("Sp takes (m,n) or (2n,C)");
        if (args[1].is_int) {
            spec = {Family::Sp_pq, {int_arg(0), int_arg(1)}};
        } else if (args[1].word == "C") {
            Int k = int_arg(0);
            if (k % 2 != 0) range_error(args[0].offset, "Sp(2n,C) requires an even argument");
            spec = {Family::Sp_C, {k / 2}};
        } else {
            throw SpecParseError(SpecParseError::Kind::Syntax, args[1].offset, {"integer", "C"},
                                 "Sp field must be an integer or C");
        }
    } else {
        if (!args.empty()) arity_error(fam + " takes no arguments");
        if (fam == "E6") spec = {Family::E6, {}};
        else if (fam == "E7") spec = {Family::E7, {}};
        else if (fam == "E8") spec = {Family::E8, {}};
        else if (fam == "F4") spec = {Family::F4, {}};
        else if (fam == "G2") spec = {Family::G2, {}};
        else spec = {Family::EII, {}};
    }

    if (auto bad = validity_violation(spec)) range_error(head.offset, *bad);
    return spec;
}

// ---------------------------------------------------------------------------
// Catalogue store.

namespace {

using nlohmann::json;

NodePtr parse_bool_or_throw(const std::string& path, const std::string& text) {
    try {
        return ExprParser(text).parse_bool();
    } catch (const DomainError& e) {
        throw SchemaError(path, e.what());
    }
}

NodePtr parse_int_or_throw(const std::string& path, const std::string& text) {
    try {
        return ExprParser(text).parse_int();
    } catch (const DomainError& e) {
        throw SchemaError(path, e.what());
    }
}

rootkit::TypeLabel type_label_from(const std::string& path, const std::string& s) {
    using TL = rootkit::TypeLabel;
    static const std::map<std::string, TL> table = {
        {"A", TL::A}, {"B", TL::B},  {"C", TL::C},  {"D", TL::D},  {"E6", TL::E6},
        {"E7", TL::E7}, {"E8", TL::E8}, {"F4", TL::F4}, {"G2", TL::G2}, {"BC", TL::BC}};
    auto it = table.find(s);
    if (it == table.end()) throw SchemaError(path, "unknown type label '" + s + "'");
    return it->second;
}

std::string get_string(const json& j, const std::string& path, const std::string& field) {
    if (!j.contains(field)) throw SchemaError(path + "." + field, "missing field");
    if (!j[field].is_string()) throw SchemaError(path + "." + field, "expected a string");
    return j[field].get<std::string>();
}

NodePtr branch_cond(const json& j, const std::string& path) {
    if (!j.contains("if")) return ExprParser("true").parse_bool();
    if (!j["if"].is_string()) throw SchemaError(path + ".if", "expected a string condition");
    return parse_bool_or_throw(path + ".if", j["if"].get<std::string>());
}

}  // namespace

Store Store::from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError("(document)", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("families") || !doc["families"].is_array())
        throw SchemaError("families", "missing or non-array field");
    const auto& fams = doc["families"];
    if (fams.empty()) throw SchemaError("families", "no records");

    Store store;
    for (std::size_t i = 0; i < fams.size(); ++i) {
        const std::string path = "families[" + std::to_string(i) + "]";
        const json& rec = fams[i];
        if (!rec.is_object()) throw SchemaError(path, "expected an object");

        FamilyRecord fr;
        const std::string fam_key = get_string(rec, path, "family");
        auto fam = family_from_name(fam_key);
        if (!fam) throw SchemaError(path + ".family", "unknown family key '" + fam_key + "'");
        fr.family = *fam;

        if (!rec.contains("params") || !rec["params"].is_array())
            throw SchemaError(path + ".params", "missing or non-array field");
        for (const auto& p : rec["params"]) {
            if (!p.is_string()) throw SchemaError(path + ".params", "expected parameter names");
            fr.param_names.push_back(p.get<std::string>());
        }

        auto pw = std::make_shared<PiecewiseExpr>();
        if (!rec.contains("constraints") || !rec["constraints"].is_array())
            throw SchemaError(path + ".constraints", "missing or non-array field");
        for (std::size_t k = 0; k < rec["constraints"].size(); ++k) {
            const auto& c = rec["constraints"][k];
            const std::string cpath = path + ".constraints[" + std::to_string(k) + "]";
            if (!c.is_string()) throw SchemaError(cpath, "expected a string");
            pw->constraints.push_back(parse_bool_or_throw(cpath, c.get<std::string>()));
        }
        fr.constraints = pw;

        auto tpw = std::make_shared<PiecewiseExpr>();
        if (!rec.contains("restricted_type") || !rec["restricted_type"].is_array())
            throw SchemaError(path + ".restricted_type", "missing or non-array field");
        for (std::size_t k = 0; k < rec["restricted_type"].size(); ++k) {
            const auto& b = rec["restricted_type"][k];
            const std::string bpath = path + ".restricted_type[" + std::to_string(k) + "]";
            PiecewiseExpr::TypeBranch tb;
            tb.cond = branch_cond(b, bpath);
            tb.label = type_label_from(bpath + ".type", get_string(b, bpath, "type"));
            tb.rank = parse_int_or_throw(bpath + ".rank", get_string(b, bpath, "rank"));
            tpw->type_branches.push_back(std::move(tb));
        }
        fr.restricted_type = tpw;

        auto mpw = std::make_shared<PiecewiseExpr>();
        if (!rec.contains("mult") || !rec["mult"].is_array())
            throw SchemaError(path + ".mult", "missing or non-array field");
        for (std::size_t k = 0; k < rec["mult"].size(); ++k) {
            const auto& b = rec["mult"][k];
            const std::string bpath = path + ".mult[" + std::to_string(k) + "]";
            PiecewiseExpr::MultBranch mb;
            mb.cond = branch_cond(b, bpath);
            if (!b.contains("classes") || !b["classes"].is_object())
                throw SchemaError(bpath + ".classes", "missing or non-object field");
            for (const auto& [cls, val] : b["classes"].items()) {
                if (!val.is_string()) throw SchemaError(bpath + ".classes." + cls, "expected a string");
                mb.classes.emplace_back(cls,
                                        parse_int_or_throw(bpath + ".classes." + cls,
                                                           val.get<std::string>()));
            }
            mpw->mult_branches.push_back(std::move(mb));
        }
        fr.mult = mpw;

        if (rec.contains("eps_G")) {
            if (!rec["eps_G"].is_number_integer())
                throw SchemaError(path + ".eps_G", "expected an integer");
            fr.eps_G = rec["eps_G"].get<Int>();
        }

        auto read_values = [&](const char* field) -> std::shared_ptr<const PiecewiseExpr> {
            if (!rec.contains(field)) return nullptr;
            if (!rec[field].is_array())
                throw SchemaError(path + "." + field, "expected an array of branches");
            auto vp = std::make_shared<PiecewiseExpr>();
            for (std::size_t k = 0; k < rec[field].size(); ++k) {
                const auto& b = rec[field][k];
                const std::string bpath = path + "." + field + "[" + std::to_string(k) + "]";
                PiecewiseExpr::ValueBranch vb;
                vb.cond = branch_cond(b, bpath);
                vb.value = parse_int_or_throw(bpath + ".value", get_string(b, bpath, "value"));
                vp->value_branches.push_back(std::move(vb));
            }
            return vp;
        };
        fr.n_G = read_values("n_G");
        fr.v_cpt = read_values("v_cpt");
        fr.provenance = get_string(rec, path, "provenance");

        if (store.records_.count(fr.family))
            throw SchemaError(path + ".family", "duplicate family record '" + fam_key + "'");
        store.records_.emplace(fr.family, std::move(fr));
    }
    return store;
}

const FamilyRecord& Store::record(Family f) const {
    auto it = records_.find(f);
    if (it == records_.end())
        throw DomainError("family " + family_name(f) + " not present in catalogue");
    return it->second;
}

Store load_catalogue(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError(path, "cannot open catalogue file");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw SchemaError(path, "no records (empty file)");
    return Store::from_json_text(text);
}

const Store& default_store() {
    static const Store store = Store::from_json_text(kDefaultCatalogueJson);
    return store;
}

// ---------------------------------------------------------------------------
// Descriptors.

namespace {

Env env_for(const FamilyRecord& rec, const GroupSpec& spec) {
    if (rec.param_names.size() != spec.params.size())
        throw DomainError("parameter arity mismatch for " + family_name(spec.family));
    Env env;
    for (std::size_t i = 0; i < spec.params.size(); ++i)
        env[rec.param_names[i]] = spec.params[i];
    return env;
}

void check_constraints(const FamilyRecord& rec, const GroupSpec& spec, const Env& env) {
    for (const auto& c : rec.constraints->constraints)
        if (!eval_bool(*c, env))
            throw DomainError(to_string(spec) + ": parameters outside catalogue validity");
}

// Class names keyed in norm-ascending order, per restricted type.
std::vector<std::string> class_names_for(rootkit::TypeLabel t) {
    using TL = rootkit::TypeLabel;
    switch (t) {
        case TL::B: return {"ei", "eiej"};
        case TL::C: return {"eiej", "2ei"};
        case TL::BC: return {"ei", "eiej", "2ei"};
        case TL::F4:
        case TL::G2: return {"short", "long"};
        default: return {"all"};
    }
}

}  // namespace

Int GroupDescriptor::mult(const Vec& root) const {
    auto it = mult_by_sqnorm.find(restricted->sqnorm(root));
    if (it == mult_by_sqnorm.end()) throw DomainError("no multiplicity for root length");
    return it->second;
}

Int GroupDescriptor::class_dim(const rootkit::CoarseClass& c) const {
    Int total = 0;
    for (const Vec& m : c.members) total += mult(m);
    return total;
}

GroupDescriptor describe(const GroupSpec& spec, const Store& store) {
    const FamilyRecord& rec = store.record(spec.family);
    Env env = env_for(rec, spec);
    check_constraints(rec, spec, env);

    GroupDescriptor d;
    d.spec = spec;
    d.name = to_string(spec);
    d.eps_G = rec.eps_G;

    const PiecewiseExpr::TypeBranch* tb = nullptr;
    for (const auto& b : rec.restricted_type->type_branches)
        if (eval_bool(*b.cond, env)) {
            tb = &b;
            break;
        }
    if (!tb) throw DomainError(d.name + ": no restricted_type branch applies");
    const int rank = static_cast<int>(eval_int(*tb->rank, env));
    d.restricted = rootkit::build_root_system(tb->label, rank);

    const PiecewiseExpr::MultBranch* mb = nullptr;
    for (const auto& b : rec.mult->mult_branches)
        if (eval_bool(*b.cond, env)) {
            mb = &b;
            break;
        }
    if (!mb) throw DomainError(d.name + ": no mult branch applies");

    // Distinct squared lengths, ascending, paired with the documented class names.
    std::vector<Int> norms;
    for (const Vec& r : d.restricted->roots) {
        Int q = d.restricted->sqnorm(r);
        if (std::find(norms.begin(), norms.end(), q) == norms.end()) norms.push_back(q);
    }
    std::sort(norms.begin(), norms.end());
    const std::vector<std::string> names = class_names_for(tb->label);

    auto lookup = [&](const std::string& cls) -> NodePtr {
        for (const auto& [name, e] : *&mb->classes)
            if (name == cls) return e;
        return nullptr;
    };

    if (NodePtr all = lookup("all"); all && mb->classes.size() == 1) {
        // A uniform multiplicity covers every length class.
        Int v = eval_int(*all, env);
        if (v < 1) throw SchemaError(family_name(spec.family) + ".mult.all", "multiplicity must be >= 1");
        for (Int q : norms) d.mult_by_sqnorm[q] = v;
    } else if (names.size() == 1 && names[0] == "all") {
        throw SchemaError(family_name(spec.family) + ".mult",
                          "missing multiplicity for class 'all'");
    } else {
        if (norms.size() != names.size())
            throw DomainError(d.name + ": length-class count mismatch");
        for (std::size_t i = 0; i < names.size(); ++i) {
            NodePtr e = lookup(names[i]);
            if (!e)
                throw SchemaError(family_name(spec.family) + ".mult",
                                  "missing multiplicity for class '" + names[i] + "'");
            Int v = eval_int(*e, env);
            if (v < 1)
                throw SchemaError(family_name(spec.family) + ".mult." + names[i],
                                  "multiplicity must be >= 1");
            d.mult_by_sqnorm[norms[i]] = v;
        }
    }
    return d;
}

bool has_tabulated(const GroupSpec& spec, Invariant which, const Store& store) {
    if (!store.has(spec.family)) return false;
    const FamilyRecord& rec = store.record(spec.family);
    const auto& pw = which == Invariant::n_G ? rec.n_G : rec.v_cpt;
    if (!pw) return false;
    Env env = env_for(rec, spec);
    for (const auto& c : rec.constraints->constraints)
        if (!eval_bool(*c, env)) return false;
    for (const auto& b : pw->value_branches)
        if (eval_bool(*b.cond, env)) return true;
    return false;
}

Int tabulated_invariant(const GroupSpec& spec, Invariant which, const Store& store) {
    const FamilyRecord& rec = store.record(spec.family);
    Env env = env_for(rec, spec);
    check_constraints(rec, spec, env);
    const char* label = which == Invariant::n_G ? "n_G" : "v_cpt";
    const auto& pw = which == Invariant::n_G ? rec.n_G : rec.v_cpt;
    if (!pw)
        throw DomainError(to_string(spec) + ": catalogue has no " + label + " for this family");
    for (const auto& b : pw->value_branches)
        if (eval_bool(*b.cond, env)) return eval_int(*b.value, env);
    throw DomainError(to_string(spec) + ": no " + std::string(label) +
                      " branch applies to these parameters");
}

}  // namespace zimt::catalogue
