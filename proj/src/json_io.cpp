#include "cdo/json_io.hpp"

namespace cdo {

namespace {

Json gamma_poly_to_json(const GammaPoly& p) {
    Json arr = Json::array();
    for (const Rational& c : p.coeffs()) arr.push_back(rational_str(c));
    return arr;
}

GammaPoly gamma_poly_from_json(const Json& j) {
    require(j.is_array(), "gamma_poly must be an array of rationals");
    GammaPoly p;
    for (size_t d = 0; d < j.size(); ++d) {
        Rational c = parse_rational(j[d].get<std::string>());
        p += GammaPoly::monomial(c, static_cast<int>(d));
    }
    return p;
}

void word_base_from_json(const Json& j, Word& w) {
    w.an = Partition::parse(j.at("lambda").get<std::string>());
    w.bn = Partition::parse(j.at("mu").get<std::string>());
    w.a0 = j.value("a0", 0);
    require(w.a0 >= 0, "a0 power must be nonnegative");
}

}  // namespace

Json element_to_json(const BElement& e) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms()) {
        require(!w.has_annihilators(), "cannot serialize an element with annihilator tails");
        terms.push_back({{"lambda", w.an.str()},
                         {"mu", w.bn.str()},
                         {"a0", w.a0},
                         {"b0", w.b0},
                         {"coeff", rational_str(c)}});
    }
    return Json{{"flavor", "b"}, {"terms", terms}};
}

Json element_to_json(const UElement& e) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms()) {
        require(!w.has_annihilators(), "cannot serialize an element with annihilator tails");
        terms.push_back({{"lambda", w.an.str()},
                         {"mu", w.bn.str()},
                         {"upow", w.upow},
                         {"a0", w.a0},
                         {"gamma_poly", gamma_poly_to_json(c)}});
    }
    return Json{{"flavor", "u"}, {"terms", terms}};
}

BElement belement_from_json(const Json& j) {
    require(j.value("flavor", "") == "b", "expected a b-flavor element");
    BElement e;
    for (const Json& t : j.at("terms")) {
        Word w;
        word_base_from_json(t, w);
        w.b0 = t.value("b0", 0);
        require(w.b0 >= 0, "b0 power must be nonnegative");
        e.add(std::move(w), parse_rational(t.at("coeff").get<std::string>()));
    }
    return e;
}

UElement uelement_from_json(const Json& j) {
    require(j.value("flavor", "") == "u", "expected a u-flavor element");
    UElement e;
    for (const Json& t : j.at("terms")) {
        Word w;
        word_base_from_json(t, w);
        w.upow = t.value("upow", 0);
        e.add(std::move(w), gamma_poly_from_json(t.at("gamma_poly")));
    }
    return e;
}

Json symbol_to_json(const FunctionSymbol& s) {
    return Json{{"name", s.name},
                {"kind", s.kind == SymbolKind::Modular ? "modular" : "eisenstein2"},
                {"weight", s.weight},
                {"depth", s.depth}};
}

FunctionSymbol symbol_from_json(const Json& j) {
    FunctionSymbol s;
    s.name = j.value("name", "f");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "modular") s.kind = SymbolKind::Modular;
    else if (kind == "eisenstein2") s.kind = SymbolKind::QuasiE;
    else throw domain_error("unknown symbol kind '" + kind + "' (no transformation rule)");
    s.weight = j.at("weight").get<int>();
    s.depth = j.value("depth", 0);
    require(s.depth >= 0, "symbol depth must be nonnegative");
    if (s.kind == SymbolKind::QuasiE) require(s.weight == 2, "E symbol must have weight 2");
    else require(s.weight >= 0 && s.weight % 2 == 0, "modular symbol weight must be even ≥ 0");
    return s;
}

Json vector_to_json(const InvariantVector& v) {
    Json terms = Json::array();
    for (const VectorTerm& t : v.terms) {
        Json jt{{"coeff", rational_str(t.coeff)},
                {"lambda", t.pair.lambda.str()},
                {"mu", t.pair.mu.str()}};
        jt["symbol"] = t.sym ? symbol_to_json(*t.sym) : Json(nullptr);
        terms.push_back(std::move(jt));
    }
    return Json{{"terms", terms}};
}

InvariantVector vector_from_json(const Json& j) {
    InvariantVector v;
    for (const Json& t : j.at("terms")) {
        VectorTerm vt;
        vt.coeff = parse_rational(t.at("coeff").get<std::string>());
        vt.pair = {Partition::parse(t.at("lambda").get<std::string>()),
                   Partition::parse(t.at("mu").get<std::string>())};
        if (t.contains("symbol") && !t.at("symbol").is_null())
            vt.sym = symbol_from_json(t.at("symbol"));
        v.terms.push_back(std::move(vt));
    }
    return v;
}

Json operator_to_json(const LiftingOperator& op) {
    const char* kind = op.kind == LiftKind::Solved     ? "solved"
                       : op.kind == LiftKind::Constant ? "constant"
                                                       : "section6";
    return Json{{"kind", kind},
                {"leading", {{"lambda", op.leading.lambda.str()}, {"mu", op.leading.mu.str()}}},
                {"element", element_to_json(op.element)}};
}

LiftingOperator operator_from_json(const Json& j) {
    LiftingOperator op;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "solved") op.kind = LiftKind::Solved;
    else if (kind == "constant") op.kind = LiftKind::Constant;
    else if (kind == "section6") op.kind = LiftKind::Section6;
    else throw domain_error("unknown lifting kind '" + kind + "'");
    op.leading = {Partition::parse(j.at("leading").at("lambda").get<std::string>()),
                  Partition::parse(j.at("leading").at("mu").get<std::string>())};
    op.element = belement_from_json(j.at("element"));
    return op;
}

Json table_to_json(const DimensionTable& t) {
    Json dims = Json::object();
    for (const auto& [k, d] : t.dims) dims[std::to_string(k)] = d;
    return Json{{"group", t.group}, {"dims", dims}};
}

DimensionTable table_from_json(const Json& j) {
    DimensionTable t;
    t.group = j.value("group", "unnamed");
    require(j.contains("dims") && j.at("dims").is_object(),
            "dimension table needs a 'dims' object");
    for (const auto& [key, val] : j.at("dims").items()) {
        int k = 0;
        try {
            size_t pos = 0;
            k = std::stoi(key, &pos);
            require(pos == key.size(), "");
        } catch (const std::logic_error&) {
            throw domain_error("dimension table weight key '" + key + "' is not an integer");
        }
        require(k >= 0 && k % 2 == 0, "dimension table keys must be even weights ≥ 0");
        long d = val.get<long>();
        require(d >= 0, "dimension table entries must be nonnegative");
        t.dims[k] = d;
    }
    return t;
}

Json qseries_to_json(const QSeries& s) {
    Json arr = Json::array();
    for (int n = 0; n <= s.order(); ++n) arr.push_back(rational_str(s[n]));
    return Json{{"order", s.order()}, {"coefficients", arr}};
}

Json symbolic_sum_to_json(const SymbolicSum& s) {
    Json arr = Json::array();
    for (const auto& [k, c] : s.terms()) {
        Json jt{{"lambda", k.lambda.str()}, {"mu", k.mu.str()}, {"upow", k.upow}};
        jt["symbol"] = k.sym ? symbol_to_json(*k.sym) : Json(nullptr);
        Json poly = Json::array();
        for (const Rational& q : c.coeffs()) poly.push_back(rational_str(q));
        jt["gamma_poly"] = poly;
        arr.push_back(std::move(jt));
    }
    return arr;
}

}  // namespace cdo
