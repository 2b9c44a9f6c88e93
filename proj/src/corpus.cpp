#include "canform/corpus.hpp"

#include <fstream>
#include <sstream>

#include "canform/errors.hpp"
#include "canform/roots.hpp"
#include "canform/treediag.hpp"

#ifndef CANFORM_CORPUS_PATH
#define CANFORM_CORPUS_PATH "data/diagrams.txt"
#endif

namespace canform {

namespace {

std::string trim(const std::string &s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    return s.substr(begin, s.find_last_not_of(" \t\r") - begin + 1);
}

std::vector<int> ints(const std::string &text)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ','))
        out.push_back(std::stoi(part));
    return out;
}

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep))
        out.push_back(part);
    return out;
}

} // namespace

std::string default_corpus_path() { return CANFORM_CORPUS_PATH; }

std::vector<CorpusEntry> parse_corpus(const std::string &text)
{
    std::vector<CorpusEntry> out;
    std::stringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;
        auto fields = split(line, '|');
        if (fields.size() != 3)
            throw DomainError("corpus line " + std::to_string(number) + ": expected 3 fields");
        out.push_back({trim(fields[0]), trim(fields[1]), trim(fields[2]), number});
    }
    return out;
}

std::vector<CorpusEntry> load_corpus(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot read corpus " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str());
}

RatFun evaluate_target(const std::string &target)
{
    std::stringstream in(target);
    std::string head;
    in >> head;
    std::vector<std::string> args;
    for (std::string a; in >> a;)
        args.push_back(a);
    auto root_data = [&](const std::string &type) { return build_root_system(LieType::parse(type)); };
    if (head == "eta" && args.size() == 2) {
        RootSystemData data = root_data(args[0]);
        auto l = data.index_of(PositiveRoot::parse(args[1]));
        if (!l)
            throw DomainError("no root " + args[1] + " in " + args[0]);
        return eta_beta(data, *l);
    }
    if (head == "omega" && (args.size() == 2 || args.size() == 3)) {
        Var anchor = args.size() == 3 ? Var::parse(args[2]) : Var::origin();
        return omega_word(ints(args[1]), Weight::parse(args[0]), anchor);
    }
    if (head == "pbw" && args.size() == 3) {
        RootSystemData data = root_data(args[0]);
        PBWExpansion e = omega_pbw(data, Weight::parse(args[1]));
        auto it = e.coeffs.find(ints(args[2]));
        return it == e.coeffs.end() ? RatFun() : it->second;
    }
    if (head == "rep" && args.size() == 4) {
        RootSystemData data = root_data(args[0]);
        std::vector<Var> anchors;
        for (const std::string &z : split(args[1], ','))
            anchors.push_back(Var::parse(z));
        std::vector<Exponents> ps;
        for (const std::string &p : split(args[3], '/'))
            ps.push_back(ints(p));
        RepForm form = omega_rep(data, anchors, Weight::parse(args[2]));
        auto it = form.coeffs.find(ps);
        return it == form.coeffs.end() ? RatFun() : it->second;
    }
    return diagram_sum_to_ratfun(parse_diagram_sum(target));
}

Report verify_corpus(const std::vector<CorpusEntry> &entries)
{
    Report report("corpus", {{"entries", entries.size()}});
    for (const CorpusEntry &e : entries) {
        ++report.checked;
        try {
            auto terms = parse_diagram_sum(e.diagram);
            for (const Diagram &d : terms)
                if (parse_diagram(render(d)) != d)
                    report.fail({{"name", e.name}, {"round_trip", render(d)}});
            RatFun got = diagram_sum_to_ratfun(terms);
            RatFun want = evaluate_target(e.target);
            if (!equals(got, want))
                report.fail({{"name", e.name}, {"diagram", got.str()}, {"target", want.str()}});
        } catch (const Error &err) {
            report.fail({{"name", e.name}, {"line", e.line}, {"error", err.what()}});
        }
    }
    return report;
}

} // namespace canform
