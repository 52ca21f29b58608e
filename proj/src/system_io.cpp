#include "magari4/system_io.hpp"

#include <cctype>

#include "magari4/errors.hpp"
#include "magari4/preservation.hpp"
#include "magari4/synthesis.hpp"

namespace magari4 {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

bool looks_like_table(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) return false;
    for (char c : text.substr(0, colon))
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    for (char c : text.substr(colon + 1))
        if (c != '0' && c != 'r' && c != 's' && c != '1') return false;
    return true;
}

std::vector<SystemLine> parse_system(std::string_view text) {
    std::vector<SystemLine> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = trim(text.substr(start, end - start));
        start = end + 1;
        ++line_no;
        if (line.empty() || line.substr(0, 2) == "//") continue;

        std::string label;
        std::string_view body = line;
        const auto colon = line.find(':');
        if (colon != std::string_view::npos && !looks_like_table(line)) {
            const auto head = trim(line.substr(0, colon));
            if (!is_variable_name(head))
                throw UsageError("line " + std::to_string(line_no) + ": bad label '" +
                                 std::string(head) + "'");
            label = std::string(head);
            body = trim(line.substr(colon + 1));
        }
        if (label.empty()) label = "S" + std::to_string(out.size() + 1);

        try {
            if (looks_like_table(body)) {
                out.push_back({label, std::nullopt, FuncTable::parse(body), line_no});
            } else {
                auto f = parse(body);
                auto vars = free_variables(f);
                std::vector<std::string> order(vars.begin(), vars.end());
                if (order.empty()) order.push_back("p");
                auto table = truth_table(f, order);
                out.push_back({label, std::move(f), std::move(table), line_no});
            }
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.position());
        }
    }
    return out;
}

SystemSigma to_sigma(const std::vector<SystemLine>& lines) {
    std::vector<SigmaMember> members;
    for (const auto& l : lines) members.push_back({l.label, l.table});
    return SystemSigma(std::move(members));
}

TwelveSystem to_twelve_system(const std::vector<SystemLine>& lines) {
    std::array<std::optional<Formula>, 12> slots;
    for (const auto& l : lines) {
        int i = 0;
        if (l.label.size() >= 2 && l.label[0] == 'F') {
            try {
                std::size_t used = 0;
                i = std::stoi(l.label.substr(1), &used);
                if (used != l.label.size() - 1) i = 0;
            } catch (const std::exception&) {
                i = 0;
            }
        }
        if (i < 1 || i > 12)
            throw UsageError("line " + std::to_string(l.line_number) + ": label '" + l.label +
                             "' is not one of F1..F12");
        auto& slot = slots[static_cast<std::size_t>(i - 1)];
        if (slot) throw UsageError("F" + std::to_string(i) + " given twice");
        if (l.formula) {
            slot = *l.formula;
        } else {
            if (!preserves_delta_pairing(l.table))
                throw UsageError("F" + std::to_string(i) +
                                 ": table does not preserve Delta x = Delta y, so no formula "
                                 "realizes it");
            slot = synthesize(l.table);
        }
    }
    std::array<Formula, 12> formulas;
    for (std::size_t k = 0; k < 12; ++k) {
        if (!slots[k]) throw UsageError("F" + std::to_string(k + 1) + " is missing");
        formulas[k] = *slots[k];
    }
    return TwelveSystem(formulas);
}

}  // namespace magari4
