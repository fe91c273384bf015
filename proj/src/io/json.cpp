#include "cog/io/json.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cog/arith/rational.hpp"
#include "cog/core/relation.hpp"
#include "cog/error.hpp"
#include "cog/util/overloaded.hpp"

namespace cog::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& message) {
    throw ValidationError(where + ": " + message);
}

void check_fields(const Json& json, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!json.is_object()) {
        fail(where, "expected an object");
    }
    std::set<std::string> names(allowed.begin(), allowed.end());
    for (const auto& [key, value] : json.items()) {
        if (names.count(key) == 0) {
            fail(where, "unknown field '" + key + "'");
        }
    }
}

const Json& field(const Json& json, const char* name, const std::string& where) {
    auto it = json.find(name);
    if (it == json.end()) {
        fail(where, std::string("missing field '") + name + "'");
    }
    return *it;
}

std::int64_t integer_from_json(const Json& json, const std::string& where) {
    if (!json.is_number_integer()) {
        fail(where, "expected an integer");
    }
    return json.get<std::int64_t>();
}

std::string string_from_json(const Json& json, const std::string& where) {
    if (!json.is_string()) {
        fail(where, "expected a string");
    }
    return json.get<std::string>();
}

std::vector<std::int64_t> integers_from_json(const Json& json, const std::string& where) {
    if (!json.is_array()) {
        fail(where, "expected a list of integers");
    }
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < json.size(); ++i) {
        out.push_back(integer_from_json(json[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

}  // namespace

Json to_json(const Rat& value) { return to_string(value); }

Rat rat_from_json(const Json& json, const std::string& where) {
    if (json.is_number_integer()) {
        return Rat(Int(json.get<std::int64_t>()));
    }
    const std::string text = string_from_json(json, where);
    try {
        return parse_rat(text);
    } catch (const std::exception&) {
        fail(where, "'" + text + "' is not a rational p/q");
    }
}

Json to_json(const Quad& value) {
    if (value.is_rational()) {
        return to_json(value.rat());
    }
    Json out;
    out["rat"] = to_json(value.rat());
    out["sqrt2"] = to_json(value.sqrt2());
    return out;
}

Quad quad_from_json(const Json& json, const std::string& where) {
    if (json.is_object()) {
        check_fields(json, {"rat", "sqrt2"}, where);
        Rat rat = json.contains("rat") ? rat_from_json(json["rat"], where + ".rat") : Rat(0);
        Rat sqrt2 = json.contains("sqrt2") ? rat_from_json(json["sqrt2"], where + ".sqrt2") : Rat(0);
        return Quad(rat, sqrt2);
    }
    return Quad(rat_from_json(json, where));
}

Json to_json(const LinearValue& value) {
    Json out = Json::array();
    for (const auto& coordinate : value.coords()) {
        out.push_back(to_json(coordinate));
    }
    return out;
}

LinearValue linear_value_from_json(const Json& json, const std::string& where) {
    if (!json.is_array()) {
        fail(where, "expected a list of coordinates");
    }
    std::vector<Quad> coords;
    for (std::size_t i = 0; i < json.size(); ++i) {
        coords.push_back(quad_from_json(json[i], where + "[" + std::to_string(i) + "]"));
    }
    return LinearValue(std::move(coords));
}

Json to_json(const LinearComponent& component) {
    switch (component.kind()) {
        case LinearComponent::Kind::Rationals:
            return "rationals";
        case LinearComponent::Kind::Integers:
            return "integers";
        case LinearComponent::Kind::QuadraticField:
            return "quadratic_field";
        case LinearComponent::Kind::Localized:
            return Json{{"localized", component.primes()}};
        case LinearComponent::Kind::CoLocalized:
            return Json{{"colocalized", component.primes()}};
    }
    throw std::logic_error("unknown component kind");
}

LinearComponent component_from_json(const Json& json, const std::string& where) {
    if (json.is_string()) {
        const std::string name = json.get<std::string>();
        if (name == "rationals") {
            return LinearComponent::rationals();
        }
        if (name == "integers") {
            return LinearComponent::integers();
        }
        if (name == "quadratic_field") {
            return LinearComponent::quadratic_field();
        }
        fail(where, "unknown component '" + name + "'");
    }
    check_fields(json, {"localized", "colocalized"}, where);
    if (json.size() != 1) {
        fail(where, "expected exactly one of 'localized' or 'colocalized'");
    }
    if (json.contains("localized")) {
        return LinearComponent::localized(integers_from_json(json["localized"], where + ".localized"));
    }
    return LinearComponent::colocalized(integers_from_json(json["colocalized"], where + ".colocalized"));
}

Json to_json(const LinearDescriptor& descriptor) {
    Json out = Json::array();
    for (const auto& component : descriptor.components()) {
        out.push_back(to_json(component));
    }
    return out;
}

LinearDescriptor descriptor_from_json(const Json& json, const std::string& where) {
    if (!json.is_array()) {
        fail(where, "expected a list of components");
    }
    std::vector<LinearComponent> components;
    for (std::size_t i = 0; i < json.size(); ++i) {
        components.push_back(component_from_json(json[i], where + "[" + std::to_string(i) + "]"));
    }
    return LinearDescriptor(std::move(components));
}

Json to_json(const FFamily& family) {
    Json digits = Json::object();
    for (const auto& [p, list] : family.explicit_digits()) {
        digits[std::to_string(p)] = list;
    }
    return Json{{"default", to_string(family.default_rule())}, {"digits", digits}};
}

FFamily family_from_json(const Json& json, const std::string& where) {
    check_fields(json, {"default", "digits"}, where);
    DefaultRule rule = DefaultRule::Unit;
    if (json.contains("default")) {
        const std::string name = string_from_json(json["default"], where + ".default");
        if (name == "zero") {
            rule = DefaultRule::Zero;
        } else if (name != "unit") {
            fail(where + ".default", "expected 'unit' or 'zero'");
        }
    }
    FFamily::DigitMap digits;
    if (json.contains("digits")) {
        const Json& map = json["digits"];
        if (!map.is_object()) {
            fail(where + ".digits", "expected an object keyed by primes");
        }
        for (const auto& [key, list] : map.items()) {
            const std::string at = where + ".digits." + key;
            std::int64_t p = 0;
            try {
                std::size_t used = 0;
                p = std::stoll(key, &used);
                if (used != key.size()) {
                    throw std::invalid_argument(key);
                }
            } catch (const std::exception&) {
                fail(at, "key is not an integer");
            }
            std::vector<int> values;
            for (const auto digit : integers_from_json(list, at)) {
                values.push_back(static_cast<int>(digit));
            }
            digits[p] = std::move(values);
        }
    }
    return FFamily(rule, std::move(digits));
}

namespace {

Json base_to_json(const Model& model) {
    return std::visit(
        Overloaded{
            [](const FiniteCyclic& m) { return Json{{"kind", "finite_cyclic"}, {"n", m.n}}; },
            [](const CircleSubgroup& m) {
                switch (m.kind) {
                    case CircleSubgroup::Kind::Rational:
                        return Json{{"kind", "circle"}, {"angles", "rational"}};
                    case CircleSubgroup::Kind::Quadratic:
                        return Json{{"kind", "circle"}, {"angles", "quadratic"}};
                    case CircleSubgroup::Kind::Generated:
                        break;
                }
                Json generators = Json::array();
                for (const auto& g : m.generators) {
                    generators.push_back(to_json(g.turns()));
                }
                return Json{{"kind", "circle"}, {"generators", generators}};
            },
            [](const QCyclic& m) {
                return Json{{"kind", "q_cyclic"},
                            {"theta", to_json(m.spec.theta.turns())},
                            {"a", to_json(m.spec.a)},
                            {"family", to_json(m.spec.family)}};
            },
            [](const WoundRound& m) {
                return Json{{"kind", "wound_round"}, {"gamma", to_json(m.gamma)}, {"z", to_json(m.z)}};
            },
        },
        model.base());
}

}  // namespace

Json to_json(const Model& model) {
    if (model.base() == BaseModel(FiniteCyclic{1}) && model.has_tail()) {
        return Json{{"kind", "linear"}, {"group", to_json(model.tail())}};
    }
    if (!model.has_tail()) {
        return base_to_json(model);
    }
    return Json{{"kind", "lex_product"}, {"top", base_to_json(model)}, {"bottom", to_json(model.tail())}};
}

Model model_from_json(const Json& json, const std::string& where) {
    if (!json.is_object()) {
        fail(where, "expected a model object");
    }
    const std::string kind = string_from_json(field(json, "kind", where), where + ".kind");
    if (kind == "finite_cyclic") {
        check_fields(json, {"kind", "n"}, where);
        std::int64_t n = integer_from_json(field(json, "n", where), where + ".n");
        if (n < 1) {
            fail(where + ".n", "must be positive");
        }
        return Model::finite_cyclic(n);
    }
    if (kind == "circle") {
        check_fields(json, {"kind", "angles", "generators"}, where);
        if (json.contains("generators") == json.contains("angles")) {
            fail(where, "a circle needs exactly one of 'angles' or 'generators'");
        }
        if (json.contains("angles")) {
            const std::string angles = string_from_json(json["angles"], where + ".angles");
            if (angles == "rational") {
                return Model::rational_circle();
            }
            if (angles == "quadratic") {
                return Model::quadratic_circle();
            }
            fail(where + ".angles", "expected 'rational' or 'quadratic'");
        }
        const Json& list = json["generators"];
        if (!list.is_array() || list.empty()) {
            fail(where + ".generators", "expected a nonempty list of angles");
        }
        std::vector<Angle> generators;
        for (std::size_t i = 0; i < list.size(); ++i) {
            generators.emplace_back(quad_from_json(list[i], where + ".generators[" + std::to_string(i) + "]"));
        }
        return Model::generated_circle(std::move(generators));
    }
    if (kind == "q_cyclic") {
        check_fields(json, {"kind", "theta", "a", "family"}, where);
        QOrderSpec spec{Angle(quad_from_json(field(json, "theta", where), where + ".theta")),
                        rat_from_json(field(json, "a", where), where + ".a"),
                        json.contains("family") ? family_from_json(json["family"], where + ".family")
                                                : FFamily::unit()};
        return Model::q_cyclic(std::move(spec));
    }
    if (kind == "wound_round") {
        check_fields(json, {"kind", "gamma", "z"}, where);
        return Model::wound_round(descriptor_from_json(field(json, "gamma", where), where + ".gamma"),
                                  linear_value_from_json(field(json, "z", where), where + ".z"));
    }
    if (kind == "linear") {
        check_fields(json, {"kind", "group"}, where);
        return Model::linear(descriptor_from_json(field(json, "group", where), where + ".group"));
    }
    if (kind == "lex_product") {
        check_fields(json, {"kind", "top", "bottom"}, where);
        Model top = model_from_json(field(json, "top", where), where + ".top");
        return lex_product(top, descriptor_from_json(field(json, "bottom", where), where + ".bottom"));
    }
    fail(where + ".kind", "unknown model kind '" + kind + "'");
}

namespace {

Json base_value_to_json(const BaseValue& base) {
    return std::visit(Overloaded{
                          [](const Residue& r) { return Json(r.value); },
                          [](const Angle& a) { return to_json(a.turns()); },
                          [](const Rat& x) { return to_json(x); },
                          [](const LinearValue& v) { return to_json(v); },
                      },
                      base);
}

BaseValue base_value_from_json(const Model& model, const Json& json, const std::string& where) {
    return std::visit(
        Overloaded{
            [&](const FiniteCyclic&) -> BaseValue { return Residue{integer_from_json(json, where)}; },
            [&](const CircleSubgroup&) -> BaseValue { return Angle(quad_from_json(json, where)); },
            [&](const QCyclic&) -> BaseValue { return rat_from_json(json, where); },
            [&](const WoundRound&) -> BaseValue { return linear_value_from_json(json, where); },
        },
        model.base());
}

bool is_linear_model(const Model& model) { return model.base() == BaseModel(FiniteCyclic{1}); }

}  // namespace

Json element_to_json(const Model& model, const Element& element) {
    if (is_linear_model(model)) {
        return to_json(element.tail);
    }
    if (!model.has_tail()) {
        return base_value_to_json(element.base);
    }
    return Json{{"base", base_value_to_json(element.base)}, {"tail", to_json(element.tail)}};
}

Element element_from_json(const Model& model, const Json& json, const std::string& where) {
    Element out;
    if (is_linear_model(model)) {
        out = Element{Residue{0}, linear_value_from_json(json, where)};
    } else if (json.is_object() && (json.contains("base") || json.contains("tail"))) {
        check_fields(json, {"base", "tail"}, where);
        out.base = base_value_from_json(model, field(json, "base", where), where + ".base");
        out.tail = json.contains("tail") ? linear_value_from_json(json["tail"], where + ".tail")
                                         : LinearValue::zero(model.tail().size());
    } else {
        out = model.from_base(base_value_from_json(model, json, where));
    }
    if (!model.contains(out)) {
        fail(where, to_string(out) + " is not an element of " + model.describe());
    }
    return out;
}

SpecFile spec_from_json(const Json& json) {
    check_fields(json, {"model", "bindings", "options", "description"}, "spec");
    SpecFile out;
    out.model = model_from_json(field(json, "model", "spec"), "spec.model");
    if (json.contains("bindings")) {
        const Json& bindings = json["bindings"];
        if (!bindings.is_object()) {
            fail("spec.bindings", "expected an object of named elements");
        }
        for (const auto& [name, value] : bindings.items()) {
            if (name == "x") {
                fail("spec.bindings", "'x' is the formula variable");
            }
            out.bindings[name] = element_from_json(out.model, value, "spec.bindings." + name);
        }
    }
    if (json.contains("options")) {
        const Json& options = json["options"];
        check_fields(options, {"height", "samples", "seed"}, "spec.options");
        if (options.contains("height")) {
            out.height = integer_from_json(options["height"], "spec.options.height");
        }
        if (options.contains("samples")) {
            out.samples = integer_from_json(options["samples"], "spec.options.samples");
        }
        if (options.contains("seed")) {
            std::int64_t seed = integer_from_json(options["seed"], "spec.options.seed");
            if (seed < 0) {
                fail("spec.options.seed", "must be nonnegative");
            }
            out.seed = static_cast<std::uint64_t>(seed);
        }
    }
    if (json.contains("description")) {
        out.description = string_from_json(json["description"], "spec.description");
    }
    return out;
}

Json to_json(const SpecFile& spec) {
    Json out;
    if (!spec.description.empty()) {
        out["description"] = spec.description;
    }
    out["model"] = to_json(spec.model);
    if (!spec.bindings.empty()) {
        Json bindings = Json::object();
        for (const auto& [name, value] : spec.bindings) {
            bindings[name] = element_to_json(spec.model, value);
        }
        out["bindings"] = bindings;
    }
    Json options = Json::object();
    if (spec.height) {
        options["height"] = *spec.height;
    }
    if (spec.samples) {
        options["samples"] = *spec.samples;
    }
    if (spec.seed) {
        options["seed"] = *spec.seed;
    }
    if (!options.empty()) {
        out["options"] = options;
    }
    return out;
}

SpecFile load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open spec file '" + path + "'");
    }
    Json json;
    try {
        json = Json::parse(in);
    } catch (const Json::parse_error& error) {
        throw ValidationError(path + ": invalid JSON: " + error.what());
    }
    return spec_from_json(json);
}

// ---------------------------------------------------------------------------------------------
// Reports

Json to_json(const AxiomReport& report) {
    Json axioms = Json::object();
    for (const char* name : {"strict", "cyclic", "total", "compatible", "cocycle", "associative", "abelian",
                             "identity", "inverse", "closure"}) {
        axioms[name] = report.count(name) == 0 ? "pass" : "fail";
    }
    Json totals = Json::object();
    for (const auto& [name, count] : report.totals) {
        totals[name] = count;
    }
    Json violations = Json::array();
    for (const auto& violation : report.violations) {
        Json witness = Json::array();
        for (const auto& g : violation.witness) {
            witness.push_back(to_string(g));
        }
        violations.push_back(Json{{"axiom", violation.axiom}, {"witness", witness}});
    }
    return Json{{"mode", report.mode},
                {"triples_checked", report.triples_checked},
                {"quadruples_checked", report.quadruples_checked},
                {"passed", report.passed()},
                {"axioms", axioms},
                {"violation_totals", totals},
                {"violations", violations}};
}

Json to_json(const Classification& classification) {
    return Json{{"class", to_string(classification.tag)},
                {"c_archimedean", classification.c_archimedean},
                {"evidence", classification.evidence}};
}

Json to_json(const TheoryInvariant& invariant) {
    Json levels = Json::array();
    for (const auto& level : invariant.levels) {
        Json table = Json::array();
        for (const auto& value : level.f_table) {
            table.push_back(to_string(value));
        }
        levels.push_back(Json{{"prime", level.prime},
                              {"depth", level.depth},
                              {"is_zero", level.is_zero},
                              {"is_linear_part", level.is_linear_part},
                              {"discrete", level.discrete},
                              {"f_table", table}});
    }
    Json order = Json::array();
    for (std::size_t i = 0; i < invariant.levels.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < invariant.levels.size(); ++j) {
            row.push_back(to_string(invariant.relation(i, j)));
        }
        order.push_back(row);
    }
    Json out{{"class", to_string(invariant.tag)},
             {"c_archimedean", invariant.c_archimedean},
             {"primes", invariant.primes},
             {"depth", invariant.depth},
             {"levels", levels},
             {"level_order", order}};
    if (invariant.tag == TheoryClass::TorsionFreeNonlinear && !invariant.levels.empty()) {
        out["partition"] = to_string(partition_of(invariant));
    }
    return out;
}

Json to_json(const Verdict& verdict) {
    Json out{{"equivalent", verdict.equivalent}, {"witness", nullptr}};
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        out["witness"] = Json{{"item", w.item}, {"p", w.p}, {"q", w.q}, {"n", w.n}, {"detail", w.detail}};
    }
    return out;
}

Json to_json(const SpineView& view) {
    Json chain = Json::array();
    for (const auto& level : view.chain) {
        Json beta = Json::object();
        for (const auto& [p, m] : level.beta) {
            beta[std::to_string(p)] = to_string(m);
        }
        Json alpha = Json::object();
        for (const auto& [key, m] : level.alpha) {
            alpha[std::to_string(key.first) + "." + std::to_string(key.second)] = to_string(m);
        }
        chain.push_back(Json{{"depth", level.depth},
                             {"primes", level.primes},
                             {"A", level.a},
                             {"F", level.f},
                             {"Dk", level.dk},
                             {"beta", beta},
                             {"alpha", alpha}});
    }
    return Json{{"n", view.n}, {"chain", chain}};
}

Json to_json(const OrderedPartition& partition) {
    return Json{{"text", to_string(partition)},
                {"classes", partition.classes},
                {"bottom_at_zero", partition.bottom_at_zero},
                {"top_discrete", partition.top_discrete},
                {"digits", to_json(partition.digits)}};
}

Json to_json(const IntervalUnion& solution) {
    const Model& model = solution.model();
    Json pieces = Json::array();
    for (const auto& g : solution.singletons()) {
        pieces.push_back(Json{{"singleton", element_to_json(model, g)}});
    }
    for (const auto& arc : solution.arcs()) {
        if (arc.from == arc.to) {
            pieces.push_back(Json{{"full_except", element_to_json(model, arc.from)}});
        } else {
            pieces.push_back(Json{{"arc", Json::array({element_to_json(model, arc.from), element_to_json(model, arc.to)})}});
        }
    }
    std::string kind = solution.is_empty() ? "empty" : solution.is_full() ? "full" : "union";
    return Json{{"kind", kind}, {"pieces", pieces}, {"text", solution.describe()}};
}

Json to_json(const Model& model, const VerifyReport& report) {
    Json mismatches = Json::array();
    for (const auto& m : report.mismatches) {
        mismatches.push_back(Json{{"x", element_to_json(model, m.x)}, {"direct", m.direct}, {"member", m.member}});
    }
    return Json{{"checked", report.checked}, {"mismatch_count", report.mismatches.size()}, {"mismatches", mismatches}};
}

Json to_json(const MinimalityVerdict& verdict) {
    return Json{{"class", to_string(verdict.tag)}, {"evidence", verdict.evidence}};
}

}  // namespace cog::io
