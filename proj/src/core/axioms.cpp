#include "cog/core/axioms.hpp"

#include "cog/core/sampling.hpp"
#include "cog/error.hpp"

namespace cog {

namespace {

constexpr std::size_t kWitnessesPerAxiom = 5;

class Recorder {
public:
    explicit Recorder(AxiomReport& report) : report_(report) {}

    void fail(const std::string& axiom, std::vector<Element> witness) {
        auto& total = report_.totals[axiom];
        if (total < kWitnessesPerAxiom) {
            report_.violations.push_back(AxiomViolation{axiom, std::move(witness)});
        }
        ++total;
    }

private:
    AxiomReport& report_;
};

int cocycle_of(const RelationFn& relation, const Element& a, const Element& b, const Element& c) {
    if (relation(a, b, c)) {
        return 1;
    }
    if (relation(c, b, a)) {
        return -1;
    }
    return 0;
}

// Checks every axiom that only involves the triple (a,b,c) and the translate by h.
void check_triple(const Model& model, const RelationFn& relation, const Element& a, const Element& b,
                  const Element& c, const Element& h, Recorder& rec) {
    bool r = relation(a, b, c);
    bool distinct = !(a == b || b == c || a == c);
    if (r && !distinct) {
        rec.fail("strict", {a, b, c});
    }
    if (r && !relation(b, c, a)) {
        rec.fail("cyclic", {a, b, c});
    }
    if (distinct && !r && !relation(c, b, a)) {
        rec.fail("total", {a, b, c});
    }
    if (r && !relation(model.add(a, h), model.add(b, h), model.add(c, h))) {
        rec.fail("compatible", {a, b, c, h});
    }
}

void check_quadruple(const RelationFn& relation, const Element& a, const Element& b, const Element& c,
                     const Element& d, Recorder& rec) {
    int sum = cocycle_of(relation, b, c, d) - cocycle_of(relation, a, c, d) +
              cocycle_of(relation, a, b, d) - cocycle_of(relation, a, b, c);
    if (sum != 0) {
        rec.fail("cocycle", {a, b, c, d});
    }
}

void check_group_laws(const Model& model, const Element& a, const Element& b, const Element& c,
                      Recorder& rec) {
    if (model.add(model.add(a, b), c) != model.add(a, model.add(b, c))) {
        rec.fail("associative", {a, b, c});
    }
    if (model.add(a, b) != model.add(b, a)) {
        rec.fail("abelian", {a, b});
    }
    if (model.add(a, model.identity()) != a) {
        rec.fail("identity", {a});
    }
    if (model.add(a, model.negate(a)) != model.identity()) {
        rec.fail("inverse", {a});
    }
    if (!model.contains(model.add(a, b))) {
        rec.fail("closure", {a, b});
    }
}

void run_exhaustive(const Model& model, const RelationFn& relation, const ExhaustiveMode& mode,
                    AxiomReport& report) {
    auto order = model.finite_order();
    if (!order) {
        throw UsageError("exhaustive axiom check needs a finite model");
    }
    if (*order > mode.max_size) {
        throw UsageError("model of order " + std::to_string(*order) + " exceeds the exhaustive bound " +
                         std::to_string(mode.max_size));
    }
    report.mode = "exhaustive";
    auto elements = model.elements();
    const std::size_t n = elements.size();

    // Tabulate the relation and the group law once.
    std::vector<char> table(n * n * n);
    auto at = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                table[at(i, j, k)] = relation(elements[i], elements[j], elements[k]) ? 1 : 0;
            }
        }
    }
    std::vector<std::size_t> sum(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            auto s = model.add(elements[i], elements[j]);
            std::size_t idx = n;
            for (std::size_t k = 0; k < n; ++k) {
                if (elements[k] == s) {
                    idx = k;
                    break;
                }
            }
            if (idx == n) {
                throw DomainError("group law leaves the enumerated carrier");
            }
            sum[i * n + j] = idx;
        }
    }

    Recorder rec(report);
    auto R = [&](std::size_t i, std::size_t j, std::size_t k) { return table[at(i, j, k)] != 0; };
    auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return R(i, j, k) ? 1 : (R(k, j, i) ? -1 : 0); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                ++report.triples_checked;
                bool r = R(i, j, k);
                bool distinct = i != j && j != k && i != k;
                if (r && !distinct) {
                    rec.fail("strict", {elements[i], elements[j], elements[k]});
                }
                if (r && !R(j, k, i)) {
                    rec.fail("cyclic", {elements[i], elements[j], elements[k]});
                }
                if (distinct && !r && !R(k, j, i)) {
                    rec.fail("total", {elements[i], elements[j], elements[k]});
                }
                if (sum[sum[i * n + j] * n + k] != sum[i * n + sum[j * n + k]]) {
                    rec.fail("associative", {elements[i], elements[j], elements[k]});
                }
                for (std::size_t h = 0; h < n; ++h) {
                    ++report.quadruples_checked;
                    if (r && !R(sum[i * n + h], sum[j * n + h], sum[k * n + h])) {
                        rec.fail("compatible", {elements[i], elements[j], elements[k], elements[h]});
                    }
                    if (c(j, k, h) - c(i, k, h) + c(i, j, h) - c(i, j, k) != 0) {
                        rec.fail("cocycle", {elements[i], elements[j], elements[k], elements[h]});
                    }
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        check_group_laws(model, elements[i], elements[(i + 1) % n], elements[(i * 7 + 3) % n], rec);
    }
}

void run_sampled(const Model& model, const RelationFn& relation, const SampledMode& mode,
                 AxiomReport& report) {
    report.mode = "sampled";
    Rng rng(mode.seed);
    // A pool with repeats and sums so that coincidences and related triples occur.
    std::vector<Element> pool{model.identity()};
    for (int i = 0; i < 24; ++i) {
        pool.push_back(sample_element(model, rng, mode.height));
    }
    for (int i = 0; i < 8; ++i) {
        const auto& a = pool[static_cast<std::size_t>(rng.uniform(1, 24))];
        const auto& b = pool[static_cast<std::size_t>(rng.uniform(1, 24))];
        pool.push_back(model.add(a, b));
        pool.push_back(model.negate(a));
    }
    auto pick = [&]() -> const Element& {
        return pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
    };
    Recorder rec(report);
    for (std::size_t s = 0; s < mode.count; ++s) {
        const Element& a = pick();
        const Element& b = pick();
        const Element& c = pick();
        Element h = rng.chance(1, 2) ? pick() : sample_element(model, rng, mode.height);
        ++report.triples_checked;
        check_triple(model, relation, a, b, c, h, rec);
        Element x = sample_element(model, rng, mode.height);
        Element y = sample_element(model, rng, mode.height);
        Element z = sample_element(model, rng, mode.height);
        check_triple(model, relation, x, y, z, a, rec);
        check_group_laws(model, x, y, z, rec);
        ++report.quadruples_checked;
        check_quadruple(relation, a, b, c, h, rec);
    }
}

}  // namespace

std::size_t AxiomReport::count(const std::string& axiom) const {
    auto it = totals.find(axiom);
    return it == totals.end() ? 0 : it->second;
}

AxiomReport check_axioms(const Model& model, const CheckMode& mode) {
    RelationFn relation = [&model](const Element& a, const Element& b, const Element& c) {
        return model.relation(a, b, c);
    };
    return check_axioms(model, relation, mode);
}

AxiomReport check_axioms(const Model& model, const RelationFn& relation, const CheckMode& mode) {
    AxiomReport report;
    if (const auto* exhaustive = std::get_if<ExhaustiveMode>(&mode)) {
        run_exhaustive(model, relation, *exhaustive, report);
    } else {
        run_sampled(model, relation, std::get<SampledMode>(mode), report);
    }
    return report;
}

}  // namespace cog
