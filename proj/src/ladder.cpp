#include "ladder.hpp"

#include <algorithm>
#include <sstream>

#include "textio.hpp"

namespace scenbdd {

std::vector<Scenario> CriticalLadder::cumulative_family(int level) const {
    std::vector<Scenario> all;
    for (int i = 0; i <= level; ++i) {
        all.insert(all.end(), levels[i].min_true_points.begin(),
                   levels[i].min_true_points.end());
    }
    return minimize_family(std::move(all));
}

CriticalLadder build_ladder(int num_edges, Mode mode,
                            const std::map<double, std::vector<Scenario>>& classes,
                            std::optional<double> penalty_alpha) {
    CriticalLadder ladder;
    ladder.num_edges = num_edges;
    ladder.mode = mode;
    ladder.penalty_alpha = penalty_alpha;

    std::vector<Scenario> kept;  // all survivors of earlier levels
    for (const auto& [alpha, family] : classes) {
        Level level;
        level.alpha = alpha;
        for (const Scenario& s : minimize_family(family)) {
            bool dominated = false;
            for (const Scenario& k : kept) {
                if (k.is_subset_of(s)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) level.min_true_points.push_back(s);
        }
        if (!level.min_true_points.empty()) {
            kept.insert(kept.end(), level.min_true_points.begin(),
                        level.min_true_points.end());
            ladder.levels.push_back(std::move(level));
        }
    }
    return ladder;
}

std::vector<std::string> validate_ladder(const CriticalLadder& ladder) {
    std::vector<std::string> out;
    for (size_t i = 0; i < ladder.levels.size(); ++i) {
        const Level& level = ladder.levels[i];
        std::string tag = "level " + std::to_string(i) + " (alpha=" + fmt_real(level.alpha) + ")";
        if (level.min_true_points.empty()) out.push_back(tag + ": empty scenario family");
        if (i > 0 && !(ladder.levels[i - 1].alpha < level.alpha)) {
            out.push_back(tag + ": alpha not strictly increasing");
        }
        for (const Scenario& s : level.min_true_points) {
            if (s.width() != ladder.num_edges) {
                out.push_back(tag + ": scenario width " + std::to_string(s.width()) +
                              " != " + std::to_string(ladder.num_edges));
            }
        }
        for (size_t a = 0; a < level.min_true_points.size(); ++a) {
            for (size_t b = 0; b < level.min_true_points.size(); ++b) {
                if (a != b &&
                    level.min_true_points[a].is_subset_of(level.min_true_points[b])) {
                    out.push_back(tag + ": not an antichain: " +
                                  level.min_true_points[a].to_string() + " subset of " +
                                  level.min_true_points[b].to_string());
                }
            }
        }
        for (size_t j = 0; j < i; ++j) {
            for (const Scenario& earlier : ladder.levels[j].min_true_points) {
                for (const Scenario& s : level.min_true_points) {
                    if (earlier.is_subset_of(s)) {
                        out.push_back(tag + ": minimality violation: level " +
                                      std::to_string(j) + " scenario " + earlier.to_string() +
                                      " subset of " + s.to_string());
                    }
                }
            }
        }
    }
    if (ladder.penalty_alpha && !ladder.levels.empty() &&
        *ladder.penalty_alpha <= ladder.levels.back().alpha) {
        out.push_back("penalty alpha must exceed the last level alpha");
    }
    return out;
}

CriticalLadder load_ladder(const std::string& text, const NetworkInstance& inst) {
    CriticalLadder ladder;
    ladder.num_edges = inst.num_edges();
    ladder.mode = inst.mode;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    Level* current = nullptr;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);

        if (line.rfind("[level]", 0) == 0 || line.rfind("[penalty]", 0) == 0) {
            bool penalty = line[1] == 'p';
            auto eq = line.find("alpha=");
            if (eq == std::string::npos) {
                throw Error::validation("line " + std::to_string(lineno) +
                                        ": section needs alpha=<real>");
            }
            double alpha = parse_real(line.substr(eq + 6), "alpha");
            if (penalty) {
                ladder.penalty_alpha = alpha;
                current = nullptr;
            } else {
                ladder.levels.push_back({alpha, {}});
                current = &ladder.levels.back();
            }
        } else {
            if (!current) {
                throw Error::validation("line " + std::to_string(lineno) +
                                        ": scenario outside a [level] section");
            }
            if (static_cast<int>(line.size()) != inst.num_edges()) {
                throw Error::validation("line " + std::to_string(lineno) + ": scenario width " +
                                        std::to_string(line.size()) + " != |E| = " +
                                        std::to_string(inst.num_edges()));
            }
            current->min_true_points.push_back(Scenario::from_string(line));
        }
    }

    auto violations = validate_ladder(ladder);
    if (!violations.empty()) {
        std::string msg = "invalid ladder:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw Error::validation(msg);
    }
    return ladder;
}

std::string serialize_ladder(const CriticalLadder& ladder) {
    std::string out;
    for (const Level& level : ladder.levels) {
        out += "[level] alpha=" + fmt_real(level.alpha) + "\n";
        for (const Scenario& s : level.min_true_points) out += s.to_string() + "\n";
    }
    if (ladder.penalty_alpha) {
        out += "[penalty] alpha=" + fmt_real(*ladder.penalty_alpha) + "\n";
    }
    return out;
}

std::vector<Scenario> minimal_transversals(const std::vector<Scenario>& family, int width,
                                           size_t bound) {
    // Sequential Berge multiplication: fold one set at a time into the
    // current transversal family, re-minimizing after each step.
    std::vector<Scenario> trans{Scenario(width)};
    for (const Scenario& s : family) {
        std::vector<Scenario> next;
        for (const Scenario& t : trans) {
            if (t.intersects(s)) {
                next.push_back(t);
                continue;
            }
            for (int e = 1; e <= width; ++e) {
                if (!s.test(e)) continue;
                Scenario grown = t;
                grown.set(e);
                next.push_back(std::move(grown));
            }
        }
        trans = minimize_family(std::move(next));
        if (trans.size() > bound) {
            throw Error::size_cap("transversal family exceeds bound " + std::to_string(bound) +
                                  " (reached " + std::to_string(trans.size()) + " sets)");
        }
    }
    return trans;
}

std::vector<Scenario> failure_clutter(const CriticalLadder& ladder, int level, size_t bound) {
    if (level < 0 || level >= ladder.num_levels()) {
        throw Error::validation("level index out of range");
    }
    return minimal_transversals(ladder.cumulative_family(level), ladder.num_edges, bound);
}

}  // namespace scenbdd
