#include "convcode/cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "convcode/caps.hpp"
#include "convcode/equivalence.hpp"
#include "convcode/errors.hpp"
#include "convcode/examples.hpp"
#include "convcode/sampling.hpp"
#include "convcode/textio.hpp"
#include "json.hpp"

namespace convcode {

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNegative = 1;
constexpr int kExitRefused = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot read file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* yesno(bool b) {
    return b ? "yes" : "no";
}

std::string automorphism_name(const Automorphism& phi) {
    if (phi.is_identity()) {
        return "identity";
    }
    return "frobenius^" + std::to_string(phi.exponent);
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ", ";
        }
        s += std::to_string(v[i]);
    }
    return s;
}

nlohmann::json enum_to_json(const WeightEnum& e) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, count] : e.coeffs()) {
        j[std::to_string(w)] = count;
    }
    return j;
}

// (Lambda^n)_{0,0}: the weight distribution of inputs that drive the zero
// state back to zero in exactly n steps.
WeightEnum truncated_zero_entry(const Wam& lam, unsigned n) {
    std::vector<WeightEnum> v(lam.states());
    v[0] = WeightEnum::one();
    for (unsigned step = 0; step < n; ++step) {
        std::vector<WeightEnum> next(lam.states());
        for (const auto& [key, e] : lam.entries()) {
            if (!v[key.first].is_zero()) {
                next[key.second] += v[key.first] * e;
            }
        }
        v = std::move(next);
    }
    return v[0];
}

int cmd_analyze(const std::string& path, bool as_json, std::ostream& out) {
    const std::string text = read_file(path);
    if (classify_file(text) == TextFileKind::encoder) {
        const EncoderFile file = parse_encoder_file(text);
        const PolyMatrix& g = file.matrix;
        const std::vector<int> rowdeg = row_degrees(g);
        const std::vector<int> forney = forney_indices(g);
        const int deg = degree(g);
        const std::size_t mcm = mcmillan_degree(g);
        const bool basic = is_basic(g), reduced = is_reduced(g), semi = is_semi_reduced(g);
        if (as_json) {
            nlohmann::json j;
            j["kind"] = "encoder";
            j["field"] = format_field(file.field);
            if (!file.label.empty()) {
                j["label"] = file.label;
            }
            j["k"] = g.rows();
            j["n"] = g.cols();
            j["degree"] = deg;
            j["row_degrees"] = rowdeg;
            j["forney_indices"] = forney;
            j["basic"] = basic;
            j["reduced"] = reduced;
            j["semi_reduced"] = semi;
            j["mcmillan_degree"] = mcm;
            out << j.dump(2) << '\n';
        } else {
            out << "kind: encoder\n";
            out << "field: " << format_field(file.field) << '\n';
            if (!file.label.empty()) {
                out << "label: " << file.label << '\n';
            }
            out << "k: " << g.rows() << '\n';
            out << "n: " << g.cols() << '\n';
            out << "degree: " << deg << '\n';
            out << "row degrees: " << join_ints(rowdeg) << '\n';
            out << "forney indices: " << join_ints(forney) << '\n';
            out << "basic: " << yesno(basic) << '\n';
            out << "reduced: " << yesno(reduced) << '\n';
            out << "semi-reduced: " << yesno(semi) << '\n';
            out << "mcmillan degree: " << mcm << '\n';
        }
        return kExitSuccess;
    }
    const StateSpace sys = parse_system_file(text);
    const SystemConditionReport rep = system_condition(sys);
    const bool controllable = is_controllable(sys), observable = is_observable(sys);
    if (as_json) {
        nlohmann::json j;
        j["kind"] = "system";
        j["field"] = format_field(sys.field());
        j["order"] = sys.delta();
        j["k"] = sys.inputs();
        j["n"] = sys.outputs();
        j["controllable"] = controllable;
        j["observable"] = observable;
        j["canonical"] = controllable && observable;
        nlohmann::json cond;
        cond["nilpotent_a"] = rep.nilpotent_a;
        cond["d_full_row_rank"] = rep.d_full_row_rank;
        cond["pencil_rank_at_zero"] = rep.pencil_rank_at_zero;
        if (rep.pencil_rank_elsewhere.has_value()) {
            cond["pencil_rank_elsewhere"] = *rep.pencil_rank_elsewhere;
        } else {
            cond["pencil_rank_elsewhere"] = nullptr;
        }
        cond["holds"] = rep.holds();
        j["condition"] = std::move(cond);
        if (rep.nilpotent_a) {
            j["encoder"] = format_polymat(reconstruct_encoder(sys));
        } else {
            j["encoder"] = nullptr;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "kind: system\n";
        out << "field: " << format_field(sys.field()) << '\n';
        out << "order: " << sys.delta() << '\n';
        out << "k: " << sys.inputs() << '\n';
        out << "n: " << sys.outputs() << '\n';
        out << "controllable: " << yesno(controllable) << '\n';
        out << "observable: " << yesno(observable) << '\n';
        out << "canonical: " << yesno(controllable && observable) << '\n';
        out << "nilpotent A: " << yesno(rep.nilpotent_a) << '\n';
        out << "D full row rank: " << yesno(rep.d_full_row_rank) << '\n';
        out << "pencil full rank at zero: " << yesno(rep.pencil_rank_at_zero) << '\n';
        if (rep.pencil_rank_elsewhere.has_value()) {
            out << "pencil full rank elsewhere: " << yesno(*rep.pencil_rank_elsewhere) << '\n';
        } else {
            out << "pencil full rank elsewhere: not evaluated (A is not nilpotent)\n";
        }
        out << "condition: " << yesno(rep.holds()) << '\n';
        if (rep.nilpotent_a) {
            out << "encoder:\n" << format_polymat(reconstruct_encoder(sys));
        } else {
            out << "encoder: none (A is not nilpotent)\n";
        }
    }
    return kExitSuccess;
}

int cmd_realize(const std::string& path, const std::string& form, bool as_json,
                std::ostream& out) {
    const std::string text = read_file(path);
    if (classify_file(text) != TextFileKind::encoder) {
        throw ParseError("realize expects an encoder file");
    }
    const EncoderFile file = parse_encoder_file(text);
    StateSpace sys = controller_form(file.matrix);
    if (form == "canonical") {
        sys = canonical_reduction(sys).system;
    }
    const bool controllable = is_controllable(sys), observable = is_observable(sys);
    const bool condition = satisfies_system_condition(sys);
    if (as_json) {
        nlohmann::json j;
        j["form"] = form;
        j["field"] = format_field(sys.field());
        j["order"] = sys.delta();
        if (sys.delta() > 0) {
            j["A"] = format_mat(sys.a);
            j["B"] = format_mat(sys.b);
            j["C"] = format_mat(sys.c);
        }
        j["D"] = format_mat(sys.d);
        j["controllable"] = controllable;
        j["observable"] = observable;
        j["canonical"] = controllable && observable;
        j["condition"] = condition;
        out << j.dump(2) << '\n';
    } else {
        out << format_system_file(sys, file.label);
        out << "# form: " << form << '\n';
        out << "# order: " << sys.delta() << '\n';
        out << "# controllable: " << yesno(controllable) << '\n';
        out << "# observable: " << yesno(observable) << '\n';
        out << "# canonical: " << yesno(controllable && observable) << '\n';
        out << "# condition: " << yesno(condition) << '\n';
    }
    return kExitSuccess;
}

int cmd_wam(const std::string& path, bool as_json, unsigned truncate, std::uint64_t max_states,
            std::ostream& out) {
    const std::string text = read_file(path);
    StateSpace sys = [&] {
        if (classify_file(text) == TextFileKind::encoder) {
            const EncoderFile file = parse_encoder_file(text);
            if (!is_reduced(file.matrix)) {
                throw PreconditionError(
                    "encoder is not reduced: the weight adjacency matrix of the code is "
                    "computed from a reduced encoder");
            }
            return controller_form(file.matrix);
        }
        return parse_system_file(text);
    }();
    const Wam lam = compute_wam(sys, max_states);
    if (as_json) {
        nlohmann::json j = wam_to_json(lam);
        if (truncate > 0) {
            nlohmann::json t;
            t["power"] = truncate;
            t["entry_00"] = enum_to_json(truncated_zero_entry(lam, truncate));
            j["truncated"] = std::move(t);
        }
        out << j.dump(2) << '\n';
    } else {
        out << "field: " << format_field(lam.field()) << '\n';
        out << "delta: " << lam.delta() << '\n';
        if (lam.delta() > 0) {
            out << "states: ";
            for (std::uint64_t x = 0; x < lam.states(); ++x) {
                out << (x ? ", " : "") << format_state(lam.field(), lam.delta(), x);
            }
            out << '\n';
        }
        out << "Lambda:\n";
        for (std::uint64_t x = 0; x < lam.states(); ++x) {
            for (std::uint64_t y = 0; y < lam.states(); ++y) {
                out << (y ? "; " : "") << format_weight_enum(lam.entry(x, y));
            }
            out << '\n';
        }
        if (truncate > 0) {
            out << "(Lambda^" << truncate
                << ")_00: " << format_weight_enum(truncated_zero_entry(lam, truncate)) << '\n';
        }
    }
    return kExitSuccess;
}

// One leg of an equivalence run: a verdict with an optional witness, or a
// structured refusal.
struct MethodOutcome {
    std::string method;
    std::string verdict;  // equivalent | not equivalent | refused
    std::string reason;   // for refusals
    std::uint64_t search_size = 0;
    std::vector<std::pair<std::string, std::string>> witness;  // name -> matrix text
    std::string automorphism;                                  // empty when none
};

MethodOutcome run_monomial_method(EquivMethod method, const PolyMatrix& a, const PolyMatrix& b,
                                  bool allow_automorphisms, std::uint64_t max_states) {
    MethodOutcome outcome;
    outcome.method = method == EquivMethod::direct ? "direct" : "wam";
    try {
        const EquivalenceReport rep =
            method == EquivMethod::direct
                ? monomial_equivalent_direct(a, b, allow_automorphisms)
                : monomial_equivalent_wam(a, b, allow_automorphisms, max_states);
        outcome.verdict = rep.verdict ? "equivalent" : "not equivalent";
        outcome.search_size = rep.search_size;
        if (rep.transform.has_value()) {
            outcome.automorphism = automorphism_name(rep.transform->phi);
            outcome.witness.emplace_back("P", format_mat(rep.transform->p));
            outcome.witness.emplace_back("R", format_mat(rep.transform->r));
        }
        if (rep.t.has_value()) {
            outcome.automorphism = automorphism_name(rep.phi.value());
            outcome.witness.emplace_back("T", format_mat(*rep.t));
        }
    } catch (const HypothesisError& e) {
        outcome.verdict = "refused";
        outcome.reason = e.what();
    } catch (const CapExceededError& e) {
        outcome.verdict = "refused";
        outcome.reason = e.what();
    }
    return outcome;
}

void print_outcome_text(const MethodOutcome& o, std::ostream& out) {
    out << "method: " << o.method << '\n';
    out << "verdict: " << o.verdict << '\n';
    if (o.verdict == "refused") {
        out << "reason: " << o.reason << '\n';
        return;
    }
    if (o.method != "feedback") {
        out << "search size: " << o.search_size << '\n';
    }
    if (!o.automorphism.empty()) {
        out << "automorphism: " << o.automorphism << '\n';
    }
    for (const auto& [name, rows] : o.witness) {
        out << name << ":\n" << rows;
    }
}

nlohmann::json outcome_to_json(const MethodOutcome& o) {
    nlohmann::json j;
    j["method"] = o.method;
    j["verdict"] = o.verdict;
    if (o.verdict == "refused") {
        j["reason"] = o.reason;
        return j;
    }
    if (o.method != "feedback") {
        j["search_size"] = o.search_size;
    }
    if (!o.witness.empty()) {
        nlohmann::json w;
        if (!o.automorphism.empty()) {
            w["automorphism"] = o.automorphism;
        }
        for (const auto& [name, rows] : o.witness) {
            w[name] = rows;
        }
        j["witness"] = std::move(w);
    }
    return j;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, const std::string& method,
              bool allow_automorphisms, bool semi_reduced, std::uint64_t max_states, bool as_json,
              std::ostream& out) {
    const std::string text_a = read_file(path_a);
    const std::string text_b = read_file(path_b);
    if (classify_file(text_a) != classify_file(text_b)) {
        throw ParseError("equiv needs two encoder files or two system files");
    }
    std::vector<MethodOutcome> outcomes;
    if (classify_file(text_a) == TextFileKind::encoder) {
        const PolyMatrix a = parse_encoder_file(text_a).matrix;
        const PolyMatrix b = parse_encoder_file(text_b).matrix;
        if (method == "direct" || method == "both") {
            outcomes.push_back(
                run_monomial_method(EquivMethod::direct, a, b, allow_automorphisms, max_states));
        }
        if (method == "wam" || method == "both") {
            outcomes.push_back(
                run_monomial_method(EquivMethod::wam, a, b, allow_automorphisms, max_states));
        }
    } else {
        const StateSpace a = parse_system_file(text_a);
        const StateSpace b = parse_system_file(text_b);
        const FeedbackEquivalence rep = feedback_equivalent(a, b, semi_reduced);
        MethodOutcome outcome;
        outcome.method = "feedback";
        outcome.verdict = rep.equivalent ? "equivalent" : "not equivalent";
        if (rep.witness.has_value()) {
            outcome.witness.emplace_back("T", format_mat(rep.witness->t));
            outcome.witness.emplace_back("U", format_mat(rep.witness->u));
            outcome.witness.emplace_back("M", format_mat(rep.witness->m));
        }
        outcomes.push_back(std::move(outcome));
    }

    int positives = 0, negatives = 0, refusals = 0;
    for (const MethodOutcome& o : outcomes) {
        if (o.verdict == "equivalent") {
            ++positives;
        } else if (o.verdict == "not equivalent") {
            ++negatives;
        } else {
            ++refusals;
        }
    }
    std::string agreement;
    if (outcomes.size() > 1) {
        if (refusals > 0) {
            agreement = "partial";
        } else if (positives > 0 && negatives > 0) {
            agreement = "no";
        } else {
            agreement = "yes";
        }
    }

    if (as_json) {
        nlohmann::json j;
        nlohmann::json results = nlohmann::json::array();
        for (const MethodOutcome& o : outcomes) {
            results.push_back(outcome_to_json(o));
        }
        j["results"] = std::move(results);
        if (!agreement.empty()) {
            j["agreement"] = agreement;
        }
        out << j.dump(2) << '\n';
    } else {
        for (const MethodOutcome& o : outcomes) {
            print_outcome_text(o, out);
        }
        if (!agreement.empty()) {
            out << "agreement: " << agreement << '\n';
        }
    }

    if (positives > 0 && negatives > 0) {
        return kExitRefused;  // the methods contradict each other
    }
    if (negatives > 0) {
        return kExitNegative;
    }
    if (positives > 0) {
        return kExitSuccess;
    }
    return kExitRefused;
}

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw Error(what);
    }
}

void selftest_random_round_trips(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 6; ++trial) {
        const FieldPtr f = Field::make(trial % 2 == 0 ? 2 : 3);
        const PolyMatrix g = random_reduced_basic(rng, f, 2, 3, {1, 1});
        require(reconstruct_encoder(controller_form(g)) == g, "controller round trip failed");
        const PolyMatrix pop = popov_form(g);
        require(popov_form(pop) == pop, "popov form is not idempotent");
        require(code_equal(g, pop), "popov form left the row module");
        require(mcmillan_degree(g) == 2, "mcmillan degree of a reduced degree-2 encoder");
        const Wam lam = compute_wam(controller_form(g));
        for (std::uint64_t x = 0; x < lam.states(); ++x) {
            std::uint64_t mass = 0;
            for (std::uint64_t y = 0; y < lam.states(); ++y) {
                mass += lam.entry(x, y).total();
            }
            require(mass == f->q() * f->q(), "weight adjacency row mass is not q^k");
        }
    }
}

int cmd_selftest(std::uint64_t seed, bool as_json, std::ostream& out) {
    using Check = std::pair<std::string, std::function<void()>>;
    const std::vector<Check> checks = {
        {"rate 2/4 controller form",
         [] {
             require(controller_form(examples::rate24_encoder()) == examples::rate24_controller(),
                     "controller form differs from the expected quadruple");
         }},
        {"rate 2/4 weight adjacency matrix",
         [] {
             require(compute_wam(examples::rate24_controller()) == examples::rate24_wam(),
                     "weight adjacency matrix differs from the expected table");
         }},
        {"rate 2/3 controller form",
         [] {
             require(controller_form(examples::rate23_encoder()) == examples::rate23_controller(),
                     "controller form differs from the expected quadruple");
         }},
        {"feedback move keeps the code",
         [] {
             const StateSpace moved =
                 apply_feedback(examples::rate23_controller(), examples::rate23_feedback());
             const PolyMatrix gbar = reconstruct_encoder(moved);
             require(gbar == examples::rate23_moved_encoder(), "moved encoder differs");
             require(!is_reduced(gbar), "moved encoder should not be reduced");
             require(is_semi_reduced(gbar), "moved encoder should stay semi-reduced");
             require(code_equal(examples::rate23_encoder(), gbar), "the code changed");
             const FeedbackEquivalence rep =
                 feedback_equivalent(examples::rate23_controller(), moved, true);
             require(rep.equivalent && rep.witness.has_value(), "feedback equivalence failed");
             require(apply_feedback(examples::rate23_controller(), *rep.witness) == moved,
                     "feedback witness does not verify");
         }},
        {"order-one semi-reduced system",
         [] {
             const StateSpace sys = examples::order_one_system();
             require(is_canonical(sys), "system should be canonical");
             require(satisfies_system_condition(sys), "rank condition should hold");
             const PolyMatrix g = reconstruct_encoder(sys);
             require(g == examples::order_one_encoder(), "reconstructed encoder differs");
             require(degree(g) == 1 && mcmillan_degree(g) == 1, "degree or order is not 1");
             require(!is_reduced(g) && is_semi_reduced(g), "reducedness flags are wrong");
         }},
        {"non-basic rank clause",
         [] {
             const StateSpace sys = examples::nonbasic_system();
             require(is_canonical(sys), "system should be canonical");
             require(!is_basic(reconstruct_encoder(sys)), "encoder should not be basic");
             const SystemConditionReport rep = system_condition(sys);
             require(rep.nilpotent_a && rep.d_full_row_rank && rep.pencil_rank_at_zero,
                     "only the nonzero-lambda clause may fail");
             require(rep.pencil_rank_elsewhere.has_value() && !*rep.pencil_rank_elsewhere,
                     "the nonzero-lambda clause should fail");
             require(!rep.holds(), "the condition should fail overall");
         }},
        {"block enumerator tie",
         [] {
             const Mat a = examples::block_code_pair(false);
             const Mat b = examples::block_code_pair(true);
             require(block_weight_enumerator(a) == examples::block_code_enumerator(),
                     "first enumerator differs");
             require(block_weight_enumerator(b) == examples::block_code_enumerator(),
                     "second enumerator differs");
             const EquivalenceReport rep = monomial_equivalent_direct(
                 PolyMatrix::from_constant(a), PolyMatrix::from_constant(b));
             require(!rep.verdict, "the block codes are not monomially equivalent");
             require(rep.search_size == 720, "search should exhaust 720 candidates");
         }},
        {"zero-index refusal",
         [] {
             const PolyMatrix a = examples::zero_index_pair(false);
             const PolyMatrix b = examples::zero_index_pair(true);
             require(compute_wam(controller_form(a)) == examples::zero_index_wam(),
                     "first adjacency matrix differs");
             require(compute_wam(controller_form(b)) == examples::zero_index_wam(),
                     "second adjacency matrix differs");
             require(!monomial_equivalent_direct(a, b).verdict,
                     "the codes are not monomially equivalent");
             bool refused = false;
             try {
                 monomial_equivalent_wam(a, b);
             } catch (const HypothesisError&) {
                 refused = true;
             }
             require(refused, "the adjacency criterion must refuse on a zero index");
         }},
        {"random round trips", [seed] { selftest_random_round_trips(seed); }},
    };

    std::size_t passed = 0;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& [name, check] : checks) {
        std::string failure;
        try {
            check();
            ++passed;
        } catch (const std::exception& e) {
            failure = e.what();
        }
        if (as_json) {
            nlohmann::json rec;
            rec["name"] = name;
            rec["pass"] = failure.empty();
            if (!failure.empty()) {
                rec["failure"] = failure;
            }
            results.push_back(std::move(rec));
        } else if (failure.empty()) {
            out << "PASS " << name << '\n';
        } else {
            out << "FAIL " << name << ": " << failure << '\n';
        }
    }
    if (as_json) {
        nlohmann::json j;
        j["checks"] = std::move(results);
        j["passed"] = passed;
        j["total"] = checks.size();
        out << j.dump(2) << '\n';
    } else {
        out << "self-test: " << passed << " of " << checks.size() << " checks passed\n";
    }
    return passed == checks.size() ? kExitSuccess : kExitNegative;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"convolutional codes as linear systems: analysis, weight adjacency "
                 "matrices and equivalence tests"};
    app.require_subcommand(1);

    std::string analyze_path;
    bool analyze_json = false;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "print the invariants of an encoder or system file");
    analyze->add_option("file", analyze_path, "encoder or system file")->required();
    analyze->add_flag("--json", analyze_json, "emit JSON");

    std::string realize_path;
    std::string realize_form = "controller";
    bool realize_json = false;
    CLI::App* realize =
        app.add_subcommand("realize", "realize an encoder file as a state space system");
    realize->add_option("file", realize_path, "encoder file")->required();
    realize->add_option("--form", realize_form, "realization form (default controller)")
        ->check(CLI::IsMember({"controller", "canonical"}));
    realize->add_flag("--json", realize_json, "emit JSON");

    std::string wam_path;
    bool wam_json = false;
    unsigned wam_truncate = 0;
    std::uint64_t wam_max_states = kDefaultMaxStates;
    CLI::App* wam = app.add_subcommand(
        "wam", "weight adjacency matrix of a reduced encoder or a system file");
    wam->add_option("file", wam_path, "encoder or system file")->required();
    wam->add_flag("--json", wam_json, "emit JSON");
    wam->add_option("--truncate", wam_truncate,
                    "also print (Lambda^N)_00, the length-N zero-to-zero weight distribution")
        ->check(CLI::PositiveNumber);
    wam->add_option("--max-states", wam_max_states, "state count cap (default 4096)");

    std::string equiv_path_a, equiv_path_b;
    std::string equiv_method = "direct";
    bool equiv_no_autos = false, equiv_semi_reduced = false, equiv_json = false;
    std::uint64_t equiv_max_states = kDefaultMaxStates;
    CLI::App* equiv = app.add_subcommand(
        "equiv", "decide monomial equivalence of two encoder files or feedback "
                 "equivalence of two system files");
    equiv->add_option("a", equiv_path_a, "first file")->required();
    equiv->add_option("b", equiv_path_b, "second file")->required();
    equiv->add_option("--method", equiv_method,
                      "monomial equivalence method (default direct)")
        ->check(CLI::IsMember({"direct", "wam", "both"}));
    equiv->add_flag("--no-automorphisms", equiv_no_autos,
                    "restrict to the identity field automorphism");
    equiv->add_flag("--semi-reduced", equiv_semi_reduced,
                    "relax the feedback test from reduced to semi-reduced encoders");
    equiv->add_option("--max-states", equiv_max_states, "state count cap (default 4096)");
    equiv->add_flag("--json", equiv_json, "emit JSON");

    std::uint64_t selftest_seed = 1;
    bool selftest_json = false;
    CLI::App* selftest =
        app.add_subcommand("selftest", "replay the built-in example gallery");
    selftest->add_option("--seed", selftest_seed, "seed for the randomized checks (default 1)");
    selftest->add_flag("--json", selftest_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitSuccess;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            return cmd_analyze(analyze_path, analyze_json, out);
        }
        if (*realize) {
            return cmd_realize(realize_path, realize_form, realize_json, out);
        }
        if (*wam) {
            return cmd_wam(wam_path, wam_json, wam_truncate, wam_max_states, out);
        }
        if (*equiv) {
            return cmd_equiv(equiv_path_a, equiv_path_b, equiv_method, !equiv_no_autos,
                             equiv_semi_reduced, equiv_max_states, equiv_json, out);
        }
        return cmd_selftest(selftest_seed, selftest_json, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const HypothesisError& e) {
        err << "refused: " << e.what() << '\n';
        return kExitRefused;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitRefused;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRefused;
    }
}

}  // namespace convcode
