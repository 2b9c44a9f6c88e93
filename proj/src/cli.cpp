#include "canform/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "canform/canonical.hpp"
#include "canform/corpus.hpp"
#include "canform/errors.hpp"
#include "canform/serialize.hpp"

namespace canform {

namespace {

// Invalid flag values; mapped to exit code 2.
struct FlagError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string type = "A";
    int rank = 0;
    std::string weight;
    std::string anchor = "0";
    std::string basis = "free";
    std::string format = "json";
    std::string out;
    std::uint64_t seed = 1729;
    int jobs = 1;
    int points = 2;

    std::string suite;
    std::string types = "A1,A2,A3,B2,B3,C2,C3,D3,D4";
    int max_weight = 4;
    int max_rank = 3;
    bool corrupt_order = false;

    std::string what = "roots";
    std::string corpus_file;
};

void add_common(CLI::App *cmd, Options &o)
{
    cmd->add_option("--type", o.type, "Lie type family A, B, C or D");
    cmd->add_option("--rank", o.rank, "number of simple roots");
    cmd->add_option("--weight", o.weight, "weight k1,k2,...");
    cmd->add_option("--anchor", o.anchor, "base point: 0 or z")->check(CLI::IsMember({"0", "z"}));
    cmd->add_option("--format", o.format, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
    cmd->add_option("--out", o.out, "output file (default stdout)");
    cmd->add_option("--seed", o.seed, "seed of the randomized equality cross-check");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
}

Weight parse_weight(const std::string &text)
{
    try {
        Weight k = Weight::parse(text);
        for (int x : k.parts())
            if (x < 0)
                throw FlagError("negative weight entry");
        return k;
    } catch (const Error &) {
        throw FlagError("malformed --weight '" + text + "'");
    }
}

Family parse_family(const std::string &text)
{
    if (text == "A")
        return Family::A;
    if (text == "B")
        return Family::B;
    if (text == "C")
        return Family::C;
    if (text == "D")
        return Family::D;
    throw FlagError("unknown --type '" + text + "'");
}

// The weight and the rank it implies; --rank, when given, must agree.
Weight weight_of(const Options &o)
{
    if (o.weight.empty())
        throw FlagError("--weight is required");
    Weight k = parse_weight(o.weight);
    if (o.rank != 0 && k.rank() != o.rank)
        throw FlagError("--weight has " + std::to_string(k.rank()) + " entries but --rank is " +
                        std::to_string(o.rank));
    return k;
}

// Builds the root system; an invalid rank is a computation error (DomainError).
RootSystemData root_data(const Options &o, int rank)
{
    LieType type{parse_family(o.type), rank};
    type.validate();
    return build_root_system(type);
}

Var anchor_of(const Options &o) { return o.anchor == "z" ? Var::z(1) : Var::origin(); }

void emit(const Options &o, const std::string &text, std::ostream &out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out);
    if (!file)
        throw FlagError("cannot write --out '" + o.out + "'");
    file << text;
}

std::string dump(const json &j) { return j.dump(2) + "\n"; }

std::string ratfun_line(const std::string &key, const RatFun &f) { return key + " : " + f.str() + "\n"; }

int cmd_compute(const Options &o, std::ostream &out)
{
    const Weight k = weight_of(o);
    const int rank = o.rank != 0 ? o.rank : k.rank();
    const Var anchor = anchor_of(o);
    if (o.basis == "free") {
        LieType{parse_family(o.type), rank}.validate();
        CanonicalForm form = omega_free(k, anchor);
        if (o.format == "json")
            emit(o, dump(to_json(form)), out);
        else if (o.format == "latex")
            emit(o, latex(form), out);
        else {
            std::string text;
            for (const auto &[J, f] : form.coeffs)
                text += ratfun_line(FreeElement::word(monomial_of(J)).str(), f);
            emit(o, text, out);
        }
        return 0;
    }
    RootSystemData data = root_data(o, rank);
    if (o.basis == "pbw") {
        PBWExpansion e = omega_pbw(data, k, anchor);
        if (o.format == "json")
            emit(o, dump(to_json(e, data)), out);
        else if (o.format == "latex")
            emit(o, latex(e, data), out);
        else {
            std::string text;
            for (const auto &[p, f] : e.coeffs)
                text += ratfun_line(pbw_monomial_text(p, data, false), f);
            emit(o, text, out);
        }
        return 0;
    }
    std::vector<Var> anchors;
    for (int m = 1; m <= o.points; ++m)
        anchors.push_back(Var::z(m));
    RepForm form = omega_rep(data, anchors, k);
    if (o.format == "json")
        emit(o, dump(to_json(form, data)), out);
    else if (o.format == "latex")
        emit(o, latex(form, data), out);
    else {
        std::string text;
        for (const auto &[ps, f] : form.coeffs) {
            std::string key;
            for (std::size_t m = 0; m < ps.size(); ++m)
                key += (m ? " (x) " : "") + pbw_monomial_text(ps[m], data, false) + " v" + std::to_string(m + 1);
            text += ratfun_line(key, f);
        }
        emit(o, text, out);
    }
    return 0;
}

using Task = std::function<Report()>;

std::vector<Report> run_tasks(const std::vector<Task> &tasks, int jobs)
{
    std::vector<Report> results(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size() && !failed; t = next++) {
            try {
                results[t] = tasks[t]();
            } catch (const std::exception &e) {
                if (!failed.exchange(true))
                    error = e.what();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < n; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto &t : pool)
        t.join();
    if (failed)
        throw Error(error);
    return results;
}

std::vector<LieType> types_of(const Options &o, bool single)
{
    std::vector<LieType> out;
    if (single) {
        out.push_back({parse_family(o.type), o.rank});
    } else {
        std::stringstream in(o.types);
        for (std::string t; std::getline(in, t, ',');) {
            try {
                out.push_back(LieType::parse(t));
            } catch (const Error &) {
                throw FlagError("unknown type '" + t + "' in --types");
            }
        }
    }
    for (const LieType &t : out)
        t.validate();
    return out;
}

void all_multi_indices(int rank, int length, MultiIndex &J, std::vector<MultiIndex> &out)
{
    if (static_cast<int>(J.size()) == length) {
        out.push_back(J);
        return;
    }
    for (int c = 1; c <= rank; ++c) {
        J.push_back(c);
        all_multi_indices(rank, length, J, out);
        J.pop_back();
    }
}

std::vector<Task> suite_tasks(const std::string &suite, const Options &o)
{
    const bool single = !o.weight.empty();
    const Var anchor = anchor_of(o);
    std::vector<Weight> free_weights;
    if (single)
        free_weights.push_back(weight_of(o));
    else
        for (int r = o.rank ? o.rank : 1; r <= (o.rank ? o.rank : o.max_rank); ++r)
            for (const Weight &k : weights_up_to(r, o.max_weight))
                free_weights.push_back(k);

    std::vector<Task> tasks;
    if (suite == "duality")
        for (const Weight &k : free_weights)
            tasks.push_back([k, anchor] { return verify_duality(k, anchor); });
    if (suite == "residue")
        for (const Weight &k : free_weights)
            for (int i = 1; i <= k.rank(); ++i)
                if (k[i] > 0)
                    tasks.push_back([k, i] { return verify_residue_recursion(k, i); });
    if (suite == "shuffle") {
        for (int r = o.rank ? o.rank : 1; r <= (o.rank ? o.rank : o.max_rank); ++r) {
            const int total = single ? weight_of(o).total() : o.max_weight;
            for (int n1 = 0; n1 <= total; ++n1)
                for (int n2 = 0; n1 + n2 <= total; ++n2) {
                    std::vector<MultiIndex> left, right;
                    MultiIndex J;
                    all_multi_indices(r, n1, J, left);
                    all_multi_indices(r, n2, J, right);
                    for (const MultiIndex &J1 : left)
                        for (const MultiIndex &J2 : right) {
                            if (single) {
                                MultiIndex both = J1;
                                both.insert(both.end(), J2.begin(), J2.end());
                                if (content_of(both, r) != weight_of(o))
                                    continue;
                            }
                            tasks.push_back([J1, J2, r] { return verify_shuffle_duality(J1, J2, r); });
                        }
                }
        }
    }
    if (suite == "matsuo")
        for (int n = 1; n <= std::max(5, o.max_weight); ++n)
            tasks.push_back([n] { return verify_matsuo(n); });

    if (suite == "pbw" || suite == "serre" || suite == "poles") {
        const bool single_type = o.rank != 0;
        for (const LieType &type : types_of(o, single_type)) {
            RootSystemData data = build_root_system(type);
            if (o.corrupt_order) {
                std::vector<std::size_t> order(data.size());
                for (std::size_t l = 0; l < order.size(); ++l)
                    order[l] = order.size() - 1 - l;
                data = reorder_roots(data, order);
            }
            if (suite == "serre") {
                tasks.push_back([data] { return verify_atoms(data); });
                continue;
            }
            std::vector<Weight> weights;
            if (single)
                weights.push_back(weight_of(o));
            else
                weights = weights_up_to(type.rank, o.max_weight);
            for (const Weight &k : weights) {
                if (k.rank() != type.rank)
                    throw FlagError("--weight does not match the rank of " + type.str());
                if (suite == "pbw")
                    tasks.push_back([data, k] { return verify_pbw_equivalence(data, k); });
                else
                    tasks.push_back([data, k] { return verify_pole_support(data, k); });
            }
        }
    }
    return tasks;
}

int cmd_verify(const Options &o, std::ostream &out)
{
    static const std::vector<std::string> suites = {"duality", "residue", "shuffle", "pbw", "serre", "matsuo", "poles"};
    std::vector<std::string> chosen;
    if (o.suite == "all")
        chosen = suites;
    else
        chosen.push_back(o.suite);

    std::vector<Task> tasks;
    for (const std::string &s : chosen) {
        auto more = suite_tasks(s, o);
        tasks.insert(tasks.end(), more.begin(), more.end());
    }
    std::vector<Report> reports = run_tasks(tasks, o.jobs);

    bool passed = true;
    std::size_t checked = 0;
    json list = json::array();
    std::string text;
    for (const Report &r : reports) {
        passed = passed && r.passed;
        checked += r.checked;
        list.push_back(r.to_json());
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.check + " " + r.params.dump() + " checked=" +
                std::to_string(r.checked) + "\n";
        for (const json &c : r.counterexamples)
            text += "  " + c.dump() + "\n";
    }
    json summary = {{"suite", o.suite},
                    {"status", passed ? "pass" : "fail"},
                    {"checked", checked},
                    {"seed", std::to_string(check_seed())},
                    {"reports", list}};
    if (o.format == "text")
        emit(o, text + (passed ? "all checks passed\n" : "some checks failed\n"), out);
    else
        emit(o, dump(summary), out);
    return passed ? 0 : 1;
}

int cmd_export(const Options &o, std::ostream &out)
{
    if (o.what == "roots") {
        if (o.rank == 0)
            throw FlagError("--rank is required");
        RootSystemData data = root_data(o, o.rank);
        if (o.format == "latex")
            emit(o, latex_root_table(data), out);
        else if (o.format == "json")
            emit(o, dump(to_json(data)), out);
        else {
            std::string text;
            for (std::size_t l = 0; l < data.size(); ++l)
                text += data.roots[l].str() + " " + data.contents[l].str() + " " +
                        (data.fscale[l] != 1 ? "(" + to_string(data.fscale[l]) + ") " : "") + data.fbeta[l].str() + "\n";
            emit(o, text, out);
        }
        return 0;
    }
    const Weight k = weight_of(o);
    if (o.format == "latex")
        throw FlagError("flags have no LaTeX form");
    json list = json::array();
    std::string text;
    for (const MultiIndex &J : multi_indices(k)) {
        json flags = json::array();
        for (const auto &[chain, c] : flag_of_word(J, k, anchor_of(o))) {
            flags.push_back({{"chain", to_json(chain)}, {"coefficient", to_string(c)}});
            text += FreeElement::word(monomial_of(J)).str() + " : " + to_string(c) + " " + to_string(chain) + "\n";
        }
        list.push_back({{"J", J}, {"flags", flags}});
    }
    emit(o, o.format == "json" ? dump({{"weight", k.parts()}, {"words", list}}) : text, out);
    return 0;
}

int cmd_corpus(const Options &o, std::ostream &out)
{
    auto entries = load_corpus(o.corpus_file.empty() ? default_corpus_path() : o.corpus_file);
    Report r = verify_corpus(entries);
    if (o.format == "text") {
        std::string text;
        for (const CorpusEntry &e : entries) {
            const bool bad = std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                                         [&](const json &c) { return c.value("name", "") == e.name; });
            text += std::string(bad ? "FAIL " : "PASS ") + e.name + "\n";
        }
        emit(o, text, out);
    } else {
        emit(o, dump(r.to_json()), out);
    }
    return r.passed ? 0 : 1;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Canonical differential forms: compute, verify, export"};
    app.require_subcommand(1, 1);

    auto *compute = app.add_subcommand("compute", "compute Omega_k in the free, PBW or representation basis");
    add_common(compute, o);
    compute->add_option("--basis", o.basis, "free, pbw or rep")->check(CLI::IsMember({"free", "pbw", "rep"}));
    compute->add_option("--points", o.points, "number of anchors for --basis rep")->check(CLI::PositiveNumber);

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, o);
    verify->add_option("suite", o.suite, "duality, residue, shuffle, pbw, serre, matsuo, poles or all")
        ->required()
        ->check(CLI::IsMember({"duality", "residue", "shuffle", "pbw", "serre", "matsuo", "poles", "all"}));
    verify->add_option("--types", o.types, "comma-separated types, e.g. A2,B3");
    verify->add_option("--max-weight", o.max_weight, "bound on |k|")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-rank", o.max_rank, "bound on the rank of the free-algebra suites")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--corrupt-order", o.corrupt_order, "reverse the root order (negative control)");

    auto *exp = app.add_subcommand("export", "export root data or flags");
    add_common(exp, o);
    exp->add_option("what", o.what, "roots or flags")->check(CLI::IsMember({"roots", "flags"}));

    auto *corpus = app.add_subcommand("corpus", "evaluate the diagram corpus");
    add_common(corpus, o);
    corpus->add_option("--file", o.corpus_file, "corpus file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        std::ostringstream text, errors;
        const int code = app.exit(e, text, errors);
        out << text.str();
        err << errors.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (const char *env = std::getenv("CANFORM_SEED")) {
            try {
                o.seed = std::stoull(env);
            } catch (const std::exception &) {
                throw FlagError("CANFORM_SEED is not a number");
            }
        }
        set_check_seed(o.seed);
        if (compute->parsed())
            return cmd_compute(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (exp->parsed())
            return cmd_export(o, out);
        return cmd_corpus(o, out);
    } catch (const FlagError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace canform
