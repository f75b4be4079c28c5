#include "spansub/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace spansub {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

[[noreturn]] void parse_fail(const std::string& source, int line_no,
                             const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line_no) + ": " + what);
}

// Reads exactly `want` integers from the line; -1 means "any positive count".
std::vector<long long> parse_ints(const std::string& source, int line_no,
                                  const std::string& line, int want) {
    std::istringstream iss(line);
    std::vector<long long> out;
    long long x;
    while (iss >> x) {
        if (x < -1000000000 || x > 1000000000) {
            parse_fail(source, line_no, "integer out of range");
        }
        out.push_back(x);
    }
    std::string junk;
    if (iss.clear(), iss >> junk) {
        parse_fail(source, line_no, "unexpected token '" + junk + "'");
    }
    if (want >= 0 && static_cast<int>(out.size()) != want) {
        parse_fail(source, line_no,
                   "expected " + std::to_string(want) + " integers, got " +
                       std::to_string(out.size()));
    }
    if (want < 0 && out.empty()) {
        parse_fail(source, line_no, "expected at least one integer");
    }
    return out;
}

} // namespace

EdgeListFile read_edge_list(std::istream& in, const std::string& source) {
    EdgeListFile file;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        auto ints = parse_ints(source, line_no, body, 2);
        if (!header_seen) {
            if (ints[0] < 1 || ints[0] > 1000000 || ints[1] < 0 ||
                ints[1] > 1000000) {
                parse_fail(source, line_no, "header 'n k' out of range");
            }
            file.n = static_cast<int>(ints[0]);
            file.k = static_cast<int>(ints[1]);
            header_seen = true;
            continue;
        }
        long long i = ints[0], j = ints[1];
        if (i < 1 || j <= i || j > file.n) {
            parse_fail(source, line_no,
                       "edge endpoints must satisfy 1 <= i < j <= n");
        }
        file.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    if (!header_seen) {
        parse_fail(source, line_no + 1, "missing 'n k' header");
    }
    return file;
}

LabeledGraph edge_list_to_graph(const EdgeListFile& file, bool check_witness) {
    LabeledGraph g(file.n, file.edges);
    if (check_witness && !bandwidth_witness_ok(g, file.k)) {
        for (int v = 1; v <= g.n(); ++v) {
            const auto& nb = g.neighbors(v);
            if (!nb.empty() && nb.back() - v > file.k) {
                throw BandwidthViolatedError(
                    "edge (" + std::to_string(v) + ", " +
                        std::to_string(nb.back()) +
                        ") stretches past the declared witness k=" +
                        std::to_string(file.k),
                    v, nb.back(), file.k);
            }
        }
    }
    return g;
}

void write_edge_list(std::ostream& out, const LabeledGraph& g, int k) {
    out << g.n() << ' ' << k << '\n';
    for (auto [i, j] : g.edges()) {
        out << i << ' ' << j << '\n';
    }
}

void write_subdivision(std::ostream& out, const RootedSubdivision& s) {
    out << "roots " << s.root_u << ' ' << s.root_w << '\n';
    for (const auto& branch : s.branches) {
        for (std::size_t i = 0; i < branch.size(); ++i) {
            out << (i ? " " : "") << branch[i];
        }
        out << '\n';
    }
}

RootedSubdivision read_subdivision(std::istream& in,
                                   const std::string& source) {
    RootedSubdivision s;
    std::string line;
    int line_no = 0;
    bool roots_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        if (!roots_seen) {
            std::istringstream iss(body);
            std::string word;
            iss >> word;
            if (word != "roots") {
                parse_fail(source, line_no, "expected 'roots u w'");
            }
            std::string rest;
            std::getline(iss, rest);
            auto ints = parse_ints(source, line_no, rest, 2);
            s.root_u = static_cast<int>(ints[0]);
            s.root_w = static_cast<int>(ints[1]);
            roots_seen = true;
            continue;
        }
        auto ints = parse_ints(source, line_no, body, -1);
        s.branches.emplace_back(ints.begin(), ints.end());
    }
    if (!roots_seen) {
        parse_fail(source, line_no + 1, "missing 'roots u w' line");
    }
    return s;
}

void write_trace(std::ostream& out, const BuildTrace& trace) {
    for (const auto& step : trace.steps) {
        if (step.crashed) {
            out << "step " << step.step << " crash " << step.endpoint << '\n';
        } else {
            out << "step " << step.step << " endpoint " << step.endpoint
                << " extend " << step.extended_to << '\n';
        }
    }
}

namespace {

void write_walk(std::ostream& out, const char* label,
                const std::vector<int>& walk) {
    out << label;
    for (int v : walk) out << ' ' << v;
    out << '\n';
}

} // namespace

void write_cycle(std::ostream& out, const std::vector<int>& cycle) {
    write_walk(out, "cycle", cycle);
}

void write_path(std::ostream& out, const std::vector<int>& path) {
    write_walk(out, "path", path);
}

void write_certificate(std::ostream& out, const Certificate& cert) {
    out << certificate_kind_name(cert.kind) << '\n';
    switch (cert.kind) {
    case CertificateKind::subdivision_found:
        write_subdivision(out, *cert.subdivision);
        break;
    case CertificateKind::hamilton_found:
        write_cycle(out, cert.cycle);
        break;
    case CertificateKind::separator:
        write_walk(out, "cut", cert.cut);
        break;
    case CertificateKind::exhausted:
        break;
    }
}

} // namespace spansub
