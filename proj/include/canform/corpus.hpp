#ifndef CANFORM_CORPUS_HPP
#define CANFORM_CORPUS_HPP

// The shipped corpus of transcribed diagrams and the check that evaluates each
// entry against its closed form.

#include <string>
#include <vector>

#include "canform/canonical.hpp"
#include "canform/polyrat.hpp"

namespace canform {

struct CorpusEntry {
    std::string name;
    std::string diagram; // a diagram sum
    std::string target;
    int line = 0;
};

std::string default_corpus_path();

// Lines "name | diagram sum | target"; blank lines and '#' comments skipped.
std::vector<CorpusEntry> parse_corpus(const std::string &text);
std::vector<CorpusEntry> load_corpus(const std::string &path);

// "eta TYPE ROOT", "omega WEIGHT J [ANCHOR]", "pbw TYPE WEIGHT P",
// "rep TYPE ANCHORS WEIGHT P1/P2/..." or a diagram sum.
RatFun evaluate_target(const std::string &target);

// Every entry evaluates to its target and every diagram survives parse(render(.)).
Report verify_corpus(const std::vector<CorpusEntry> &entries);

} // namespace canform

#endif
