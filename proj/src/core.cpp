#include "edisc/core.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace edisc {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

// ---- Hypergraph -----------------------------------------------------------

Hypergraph::Hypergraph(std::vector<std::string> vertices,
                       std::vector<std::vector<VertexIndex>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (VertexIndex v = 0; v < vertices_.size(); ++v) {
        if (!index_.emplace(vertices_[v], v).second)
            throw InvariantError("duplicate vertex name '" + vertices_[v] + "'");
    }
    incidence_.assign(vertices_.size(), {});
    sorted_edges_.reserve(edges_.size());
    std::set<std::vector<VertexIndex>> seen;
    for (EdgeIndex i = 0; i < edges_.size(); ++i) {
        auto sorted = edges_[i];
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (sorted.empty())
            throw InvariantError("edge " + std::to_string(i + 1) + " is empty");
        if (sorted.back() >= vertices_.size())
            throw InvariantError("edge " + std::to_string(i + 1) + " references unknown vertex");
        if (!seen.insert(sorted).second)
            throw InvariantError("edge " + std::to_string(i + 1) + " duplicates an earlier edge");
        if (sorted.size() != edges_[i].size()) {
            // keep the first occurrence of a repeated index
            std::vector<VertexIndex> kept;
            for (auto v : edges_[i])
                if (std::find(kept.begin(), kept.end(), v) == kept.end()) kept.push_back(v);
            edges_[i] = std::move(kept);
        }
        for (auto v : sorted) incidence_[v].push_back(i);
        sorted_edges_.push_back(std::move(sorted));
    }
}

Hypergraph Hypergraph::from_named_edges(const std::vector<std::vector<std::string>>& edges) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexIndex> index;
    std::vector<std::vector<VertexIndex>> indexed;
    indexed.reserve(edges.size());
    for (const auto& e : edges) {
        std::vector<VertexIndex> row;
        row.reserve(e.size());
        for (const auto& name : e) {
            auto [it, inserted] = index.emplace(name, names.size());
            if (inserted) names.push_back(name);
            row.push_back(it->second);
        }
        indexed.push_back(std::move(row));
    }
    return Hypergraph(std::move(names), std::move(indexed));
}

std::optional<VertexIndex> Hypergraph::find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<VertexIndex>& Hypergraph::edge(EdgeIndex i) const {
    if (i >= edges_.size())
        throw std::out_of_range("unknown edge index " + std::to_string(i + 1));
    return edges_[i];
}

bool Hypergraph::contains(EdgeIndex i, VertexIndex v) const {
    if (i >= sorted_edges_.size())
        throw std::out_of_range("unknown edge index " + std::to_string(i + 1));
    return std::binary_search(sorted_edges_[i].begin(), sorted_edges_[i].end(), v);
}

std::size_t Hypergraph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& inc : incidence_) best = std::max(best, inc.size());
    return best;
}

// ---- Labeling -------------------------------------------------------------

Labeling::Labeling(std::vector<Weight> values) : values_(std::move(values)) {
    for (std::size_t v = 0; v < values_.size(); ++v)
        if (values_[v] < 0)
            throw InvariantError("negative label at vertex index " + std::to_string(v));
}

void Labeling::set(VertexIndex v, Weight w) {
    if (w < 0) throw InvariantError("negative label");
    values_.at(v) = w;
}

Weight edge_weight(const Hypergraph& h, const Labeling& labels, EdgeIndex i) {
    Weight sum = 0;
    for (auto v : h.edge(i)) sum += labels[v];
    return sum;
}

std::vector<Weight> edge_weights(const Hypergraph& h, const Labeling& labels) {
    std::vector<Weight> out;
    out.reserve(h.edge_count());
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) out.push_back(edge_weight(h, labels, i));
    return out;
}

Weight total_weight(const Labeling& labels) {
    Weight sum = 0;
    for (auto w : labels.values()) sum += w;
    return sum;
}

std::string Verdict::describe() const {
    if (!violation) return "valid";
    const auto& v = *violation;
    switch (v.kind) {
    case Violation::Kind::SizeMismatch:
        return "labeling does not cover the vertex set";
    case Violation::Kind::ZeroWeight:
        return "edge " + std::to_string(v.first + 1) + " has weight 0";
    case Violation::Kind::Collision:
        return "edges " + std::to_string(v.first + 1) + "," + std::to_string(v.second + 1) +
               " both weigh " + std::to_string(v.weight);
    }
    return "invalid";
}

Verdict validate_discriminator(const Hypergraph& h, const Labeling& labels) {
    Verdict verdict;
    if (labels.size() != h.vertex_count()) {
        verdict.violation = Violation{Violation::Kind::SizeMismatch};
        return verdict;
    }
    verdict.weights = edge_weights(h, labels);
    const auto& w = verdict.weights;
    for (EdgeIndex i = 0; i < w.size(); ++i) {
        if (w[i] <= 0) {
            verdict.violation = Violation{Violation::Kind::ZeroWeight, i, 0, w[i]};
            return verdict;
        }
    }
    std::map<Weight, EdgeIndex> first_with;
    std::optional<Violation> best;
    for (EdgeIndex j = 0; j < w.size(); ++j) {
        auto [it, inserted] = first_with.emplace(w[j], j);
        if (!inserted) {
            Violation c{Violation::Kind::Collision, it->second, j, w[j]};
            if (!best || std::pair(c.first, c.second) < std::pair(best->first, best->second))
                best = c;
        }
    }
    verdict.violation = best;
    return verdict;
}

// ---- IncidenceVector ------------------------------------------------------

IncidenceVector::IncidenceVector(std::vector<EdgeIndex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool IncidenceVector::contains(EdgeIndex i) const {
    return std::binary_search(members_.begin(), members_.end(), i);
}

std::uint64_t IncidenceVector::mask() const {
    std::uint64_t m = 0;
    for (auto i : members_) {
        if (i >= 64) throw std::out_of_range("incidence vector does not fit a 64-bit mask");
        m |= std::uint64_t{1} << i;
    }
    return m;
}

IncidenceVector IncidenceVector::from_mask(std::uint64_t mask) {
    std::vector<EdgeIndex> members;
    for (EdgeIndex i = 0; i < 64; ++i)
        if (mask >> i & 1U) members.push_back(i);
    return IncidenceVector(std::move(members));
}

std::string IncidenceVector::to_string() const {
    std::string s = "{";
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(members_[k] + 1);
    }
    return s + "}";
}

// ---- ReducedHypergraph ----------------------------------------------------

ReducedHypergraph::ReducedHypergraph(std::size_t edge_count, std::vector<IncidenceVector> classes)
    : edge_count_(edge_count), classes_(std::move(classes)) {
    check_invariants();
}

void ReducedHypergraph::check_invariants() const {
    std::set<IncidenceVector> seen;
    for (const auto& c : classes_) {
        if (c.empty()) throw InvariantError("empty incidence class");
        if (c.members().back() >= edge_count_)
            throw InvariantError("incidence class " + c.to_string() + " exceeds edge count");
        if (!seen.insert(c).second)
            throw InvariantError("repeated incidence class " + c.to_string());
    }
    std::set<std::vector<std::size_t>> edges;
    for (EdgeIndex i = 0; i < edge_count_; ++i) {
        std::vector<std::size_t> support;
        for (std::size_t k = 0; k < classes_.size(); ++k)
            if (classes_[k].contains(i)) support.push_back(k);
        if (support.empty())
            throw InvariantError("edge " + std::to_string(i + 1) + " has no class");
        if (!edges.insert(std::move(support)).second)
            throw InvariantError("edge " + std::to_string(i + 1) + " duplicates an earlier edge");
    }
}

ReducedHypergraph reduce(const Hypergraph& h) {
    ReducedHypergraph r;
    r.edge_count_ = h.edge_count();
    r.class_map_.assign(h.vertex_count(), std::nullopt);
    std::map<std::vector<EdgeIndex>, std::size_t> known;
    for (VertexIndex v = 0; v < h.vertex_count(); ++v) {
        const auto& inc = h.incident_edges(v);
        if (inc.empty()) continue;
        auto [it, inserted] = known.emplace(inc, r.classes_.size());
        if (inserted) {
            r.classes_.emplace_back(inc);
            r.representatives_.push_back(v);
        }
        r.class_map_[v] = it->second;
    }
    return r;
}

Hypergraph ReducedHypergraph::to_hypergraph() const {
    std::vector<std::string> names;
    names.reserve(classes_.size());
    for (std::size_t k = 0; k < classes_.size(); ++k) names.push_back("c" + std::to_string(k + 1));
    std::vector<std::vector<VertexIndex>> edges(edge_count_);
    for (std::size_t k = 0; k < classes_.size(); ++k)
        for (auto i : classes_[k].members()) edges[i].push_back(k);
    return Hypergraph(std::move(names), std::move(edges));
}

Labeling ReducedHypergraph::project(const Labeling& original) const {
    if (class_map_.size() != original.size())
        throw InvariantError("labeling size does not match the reduced hypergraph's source");
    std::vector<Weight> totals(classes_.size(), 0);
    for (VertexIndex v = 0; v < original.size(); ++v)
        if (class_map_[v]) totals[*class_map_[v]] += original[v];
    return Labeling(std::move(totals));
}

Labeling ReducedHypergraph::lift(const Labeling& class_labels, std::size_t original_vertex_count) const {
    if (class_labels.size() != classes_.size())
        throw InvariantError("class labeling size mismatch");
    if (representatives_.size() != classes_.size())
        throw InvariantError("reduced hypergraph has no source vertices to lift onto");
    Labeling out(original_vertex_count);
    for (std::size_t k = 0; k < classes_.size(); ++k) out.set(representatives_[k], class_labels[k]);
    return out;
}

// ---- text formats ---------------------------------------------------------

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
    while (i < line.size()) {
        while (i < line.size() && blank(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !blank(line[i])) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++lineno;
        fn(lineno, text.substr(pos, nl - pos));
        if (nl == text.size()) break;
        pos = nl + 1;
    }
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, VertexIndex> index;
    std::vector<std::vector<VertexIndex>> edges;
    std::map<std::vector<VertexIndex>, std::size_t> seen;

    for_each_line(text, [&](std::size_t lineno, std::string_view line) {
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') return;
        std::vector<VertexIndex> row;
        for (const auto& tok : tokens) {
            if (tok.front() == '#')
                throw ParseError(lineno, "'#' may only start a comment line");
            auto [it, inserted] = index.emplace(tok, names.size());
            if (inserted) names.push_back(tok);
            if (std::find(row.begin(), row.end(), it->second) == row.end()) row.push_back(it->second);
        }
        auto key = row;
        std::sort(key.begin(), key.end());
        auto [it, inserted] = seen.emplace(std::move(key), lineno);
        if (!inserted)
            throw ParseError(lineno, "duplicate edge (same as line " + std::to_string(it->second) + ")");
        edges.push_back(std::move(row));
    });
    return Hypergraph(std::move(names), std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::string out;
    for (const auto& e : h.edges()) {
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k) out += ' ';
            out += h.vertex_name(e[k]);
        }
        out += '\n';
    }
    return out;
}

std::string format_labeling(const Hypergraph& h, const Labeling& labels) {
    std::ostringstream os;
    for (VertexIndex v = 0; v < h.vertex_count(); ++v)
        os << "v " << h.vertex_name(v) << ' ' << labels[v] << '\n';
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        os << "e " << i + 1 << ' ' << edge_weight(h, labels, i) << '\n';
    os << "total " << total_weight(labels) << '\n';
    return os.str();
}

Labeling parse_labeling(const Hypergraph& h, std::string_view text) {
    Labeling labels(h.vertex_count());
    std::vector<bool> assigned(h.vertex_count(), false);
    for_each_line(text, [&](std::size_t lineno, std::string_view line) {
        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front() != "v") return;
        if (tokens.size() != 3) throw ParseError(lineno, "expected 'v <vertex> <weight>'");
        auto v = h.find_vertex(tokens[1]);
        if (!v) throw ParseError(lineno, "unknown vertex '" + tokens[1] + "'");
        if (assigned[*v]) throw ParseError(lineno, "vertex '" + tokens[1] + "' labeled twice");
        Weight w = 0;
        std::size_t used = 0;
        try {
            w = std::stoll(tokens[2], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tokens[2].size() || w < 0)
            throw ParseError(lineno, "weight must be a non-negative integer");
        labels.set(*v, w);
        assigned[*v] = true;
    });
    return labels;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace edisc
