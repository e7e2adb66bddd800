#include "instance.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "textio.hpp"

namespace scenbdd {

namespace {

std::string strip(const std::string& line) {
    std::string s = line;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail_at(int lineno, const std::string& msg) {
    throw Error::validation("line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

int NetworkInstance::node_index(const std::string& id) const {
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == id) return static_cast<int>(i);
    }
    return -1;
}

std::vector<int> NetworkInstance::decidable_edges() const {
    std::vector<int> out;
    for (const Edge& e : edges) {
        if (e.decidable) out.push_back(e.id);
    }
    return out;
}

NetworkInstance parse_instance(const std::string& text) {
    NetworkInstance inst;
    enum class Section { None, Meta, Nodes, Edges };
    Section section = Section::None;
    bool saw_meta = false;
    bool mode_set = false, source_set = false, sink_set = false, directed_set = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;

        if (line[0] == '[') {
            auto close = line.find(']');
            if (close == std::string::npos) fail_at(lineno, "unterminated section header");
            std::string name = line.substr(1, close - 1);
            std::string rest = strip(line.substr(close + 1));
            if (name == "meta") {
                section = Section::Meta;
                saw_meta = true;
                // meta key=value pairs sit on the header line itself
                for (const std::string& tok : split_ws(rest)) {
                    auto eq = tok.find('=');
                    if (eq == std::string::npos) fail_at(lineno, "expected key=value, got '" + tok + "'");
                    std::string key = tok.substr(0, eq);
                    std::string val = tok.substr(eq + 1);
                    if (key == "mode") {
                        if (val == "shortest_path")
                            inst.mode = Mode::ShortestPath;
                        else if (val == "max_flow")
                            inst.mode = Mode::MaxFlow;
                        else
                            fail_at(lineno, "mode must be shortest_path or max_flow");
                        mode_set = true;
                    } else if (key == "directed") {
                        inst.directed = parse_int(val, "directed") != 0;
                        directed_set = true;
                    } else if (key == "source") {
                        inst.source = val;
                        source_set = true;
                    } else if (key == "sink") {
                        inst.sink = val;
                        sink_set = true;
                    } else if (key == "cutoff") {
                        double c = parse_real(val, "cutoff");
                        if (std::isfinite(c)) inst.cutoff = c;
                    } else if (key == "penalty") {
                        inst.penalty = parse_real(val, "penalty");
                    } else if (key == "budget") {
                        inst.budget = parse_real(val, "budget");
                    } else {
                        fail_at(lineno, "unknown meta key '" + key + "'");
                    }
                }
            } else if (name == "nodes") {
                section = Section::Nodes;
                if (!rest.empty()) fail_at(lineno, "[nodes] header takes no inline content");
            } else if (name == "edges") {
                section = Section::Edges;
                if (!rest.empty()) fail_at(lineno, "[edges] header takes no inline content");
            } else {
                fail_at(lineno, "unknown section [" + name + "]");
            }
            continue;
        }

        switch (section) {
            case Section::None:
                fail_at(lineno, "content before any section header");
            case Section::Meta:
                fail_at(lineno, "meta entries belong on the [meta] line");
            case Section::Nodes: {
                auto toks = split_ws(line);
                if (toks.size() != 1) fail_at(lineno, "expected one node id per line");
                inst.nodes.push_back(toks[0]);
                break;
            }
            case Section::Edges: {
                auto toks = split_ws(line);
                if (toks.size() != 7) {
                    fail_at(lineno,
                            "expected 7 fields: tail head weight p delta cost decidable");
                }
                Edge e;
                e.id = static_cast<int>(inst.edges.size()) + 1;
                e.tail = toks[0];
                e.head = toks[1];
                e.weight = parse_real(toks[2], "edge weight");
                e.p = parse_real(toks[3], "edge p");
                e.delta = parse_real(toks[4], "edge delta");
                e.cost = parse_real(toks[5], "edge cost");
                long dec = parse_int(toks[6], "edge decidable flag");
                if (dec != 0 && dec != 1) fail_at(lineno, "decidable flag must be 0 or 1");
                e.decidable = dec == 1;
                inst.edges.push_back(e);
                break;
            }
        }
    }

    if (!saw_meta) throw Error::validation("missing [meta] section");
    if (!mode_set) throw Error::validation("[meta] must set mode");
    if (!source_set || !sink_set) throw Error::validation("[meta] must set source and sink");
    if (!directed_set) inst.directed = inst.mode == Mode::MaxFlow;

    auto violations = validate_instance(inst);
    if (!violations.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& v : violations) msg += "\n  " + v;
        throw Error::validation(msg);
    }
    return inst;
}

std::vector<std::string> validate_instance(const NetworkInstance& inst) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    for (const auto& n : inst.nodes) {
        if (!seen.insert(n).second) out.push_back("duplicate node id '" + n + "'");
    }
    if (inst.nodes.empty()) out.push_back("no nodes declared");
    if (inst.source == inst.sink) out.push_back("source equals sink");
    if (!seen.count(inst.source)) out.push_back("source '" + inst.source + "' not declared");
    if (!seen.count(inst.sink)) out.push_back("sink '" + inst.sink + "' not declared");

    if (inst.cutoff) {
        if (*inst.cutoff < 0) out.push_back("cutoff must be >= 0");
        if (!inst.penalty) {
            out.push_back("penalty required when cutoff is finite");
        } else if (*inst.penalty <= *inst.cutoff) {
            out.push_back("penalty must exceed cutoff");
        }
    }
    if (inst.budget < 0) out.push_back("budget must be nonnegative");

    for (size_t i = 0; i < inst.edges.size(); ++i) {
        const Edge& e = inst.edges[i];
        std::string tag = "edge " + std::to_string(i + 1);
        if (e.id != static_cast<int>(i) + 1)
            out.push_back(tag + ": index not contiguous (got " + std::to_string(e.id) + ")");
        if (!seen.count(e.tail)) out.push_back(tag + ": tail '" + e.tail + "' not declared");
        if (!seen.count(e.head)) out.push_back(tag + ": head '" + e.head + "' not declared");
        if (!(e.weight > 0)) out.push_back(tag + ": weight must be > 0");
        if (e.p < 0.0 || e.p > 1.0) out.push_back(tag + ": p out of [0,1]");
        if (e.delta < -e.p || e.delta > 1.0 - e.p)
            out.push_back(tag + ": delta out of [-p,1-p]");
        if (e.cost < 0) out.push_back(tag + ": cost must be nonnegative");
        if (!e.decidable && e.delta != 0.0)
            out.push_back(tag + ": delta must be 0 on non-decidable edge");
    }
    return out;
}

std::string serialize_instance(const NetworkInstance& inst) {
    std::string out = "[meta] mode=";
    out += inst.mode == Mode::ShortestPath ? "shortest_path" : "max_flow";
    out += " directed=" + std::string(inst.directed ? "1" : "0");
    out += " source=" + inst.source + " sink=" + inst.sink;
    out += " cutoff=" + (inst.cutoff ? fmt_real(*inst.cutoff) : std::string("inf"));
    if (inst.penalty) out += " penalty=" + fmt_real(*inst.penalty);
    out += " budget=" + fmt_real(inst.budget);
    out += "\n[nodes]\n";
    for (const auto& n : inst.nodes) out += n + "\n";
    out += "[edges]\n";
    for (const Edge& e : inst.edges) {
        out += e.tail + " " + e.head + " " + fmt_real(e.weight) + " " + fmt_real(e.p) + " " +
               fmt_real(e.delta) + " " + fmt_real(e.cost) + " " + (e.decidable ? "1" : "0") +
               "\n";
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error::io("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error::io("cannot write file: " + path);
    out << content;
    if (!out) throw Error::io("write failed: " + path);
}

NetworkInstance read_instance_file(const std::string& path) {
    return parse_instance(read_text_file(path));
}

}  // namespace scenbdd
