#include "khpages/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

#include "khpages/errors.hpp"

namespace khpages {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// slot index is an "in" slot: slot0 always; slot3 for positive, slot1 for negative.
bool is_in_slot(const Crossing& c, int slot) {
    if (slot == 0) return true;
    if (slot == 2) return false;
    return c.sign > 0 ? slot == 3 : slot == 1;
}

}  // namespace

bool PlanarDiagram::is_connected() const {
    int components = static_cast<int>(free_circles.size());
    if (crossings.empty()) return components == 1;
    UnionFind uf(edge_count);
    for (const Crossing& c : crossings) {
        for (int s = 1; s < 4; ++s) uf.unite(c.slots[0], c.slots[s]);
    }
    std::vector<char> seen(edge_count, 0);
    std::vector<char> is_free(edge_count, 0);
    for (int e : free_circles) is_free[e] = 1;
    for (int e = 0; e < edge_count; ++e) {
        if (is_free[e]) continue;
        int r = uf.find(e);
        if (!seen[r]) {
            seen[r] = 1;
            ++components;
        }
    }
    return components == 1;
}

void PlanarDiagram::validate() const {
    if (edge_count <= 0) throw DomainError("diagram: no edges");
    if (marked_edge < 0 || marked_edge >= edge_count) throw DomainError("diagram: marked edge out of range");
    std::vector<int> in_count(edge_count, 0), out_count(edge_count, 0);
    int plus = 0, minus = 0;
    for (const Crossing& c : crossings) {
        if (c.sign != 1 && c.sign != -1) throw DomainError("diagram: crossing sign must be +1 or -1");
        (c.sign > 0 ? plus : minus)++;
        for (int s = 0; s < 4; ++s) {
            int e = c.slots[s];
            if (e < 0 || e >= edge_count) throw DomainError("diagram: edge id out of range");
            (is_in_slot(c, s) ? in_count : out_count)[e]++;
        }
    }
    if (plus != n_plus || minus != n_minus) throw DomainError("diagram: stored sign counts are wrong");
    std::vector<char> is_free(edge_count, 0);
    for (int e : free_circles) {
        if (e < 0 || e >= edge_count) throw DomainError("diagram: free circle id out of range");
        if (is_free[e]) throw DomainError("diagram: duplicate free circle");
        is_free[e] = 1;
    }
    for (int e = 0; e < edge_count; ++e) {
        if (is_free[e]) {
            if (in_count[e] || out_count[e])
                throw DomainError("diagram: free circle " + std::to_string(e) + " meets a crossing");
        } else if (in_count[e] != 1 || out_count[e] != 1) {
            throw DomainError("diagram: edge " + std::to_string(e) +
                              " must fill exactly one in-slot and one out-slot");
        }
    }
}

ResolutionVector ResolutionVector::from_mask(uint64_t mask, int crossing_count) {
    ResolutionVector v;
    v.bits.resize(static_cast<size_t>(crossing_count));
    for (int j = 0; j < crossing_count; ++j) v.bits[j] = (mask >> j) & 1;
    return v;
}

uint64_t ResolutionVector::to_mask() const {
    uint64_t mask = 0;
    for (size_t j = 0; j < bits.size(); ++j)
        if (bits[j]) mask |= uint64_t{1} << j;
    return mask;
}

int ResolutionVector::weight() const {
    int w = 0;
    for (uint8_t b : bits) w += b;
    return w;
}

PlanarDiagram braid_to_diagram(const BraidWord& braid) {
    braid.validate();
    const int s = braid.strands;
    int next_id = s;
    std::vector<int> cur(s);
    std::iota(cur.begin(), cur.end(), 0);

    PlanarDiagram d;
    for (int letter : braid.letters) {
        int i = std::abs(letter) - 1;  // 0-based left strand position
        int left_in = cur[i], right_in = cur[i + 1];
        int out_left = next_id++, out_right = next_id++;
        Crossing c;
        if (letter > 0) {
            c.sign = +1;
            c.slots = {right_in, out_right, out_left, left_in};
        } else {
            c.sign = -1;
            c.slots = {left_in, right_in, out_right, out_left};
        }
        d.crossings.push_back(c);
        cur[i] = out_left;
        cur[i + 1] = out_right;
    }

    // Closure: the edge leaving the top of strand p is the edge entering the
    // bottom of strand p.
    std::vector<int> remap(next_id);
    std::iota(remap.begin(), remap.end(), 0);
    for (int p = 0; p < s; ++p) {
        if (cur[p] != p) remap[cur[p]] = p;
    }
    std::vector<char> used(next_id, 0);
    for (Crossing& c : d.crossings) {
        for (int& e : c.slots) {
            e = remap[e];
            used[e] = 1;
        }
    }
    std::vector<int> compact(next_id, -1);
    int count = 0;
    for (int e = 0; e < next_id; ++e) {
        if (used[e]) compact[e] = count++;
    }
    // Strands untouched by any crossing close into free circles.
    for (int p = 0; p < s; ++p) {
        if (!used[p]) {
            compact[p] = count++;
            d.free_circles.push_back(compact[p]);
        }
    }
    for (Crossing& c : d.crossings) {
        for (int& e : c.slots) e = compact[e];
    }
    d.edge_count = count;
    d.marked_edge = compact[0];
    d.n_plus = braid.positive_count();
    d.n_minus = braid.crossing_count() - d.n_plus;
    d.validate();
    return d;
}

CircleSet resolve(const PlanarDiagram& d, const ResolutionVector& I) {
    if (static_cast<int>(I.bits.size()) != d.crossing_count())
        throw DomainError("resolve: resolution length does not match crossing count");
    UnionFind uf(d.edge_count);
    for (int j = 0; j < d.crossing_count(); ++j) {
        const auto& s = d.crossings[j].slots;
        if (I.bits[j] == 0) {
            uf.unite(s[0], s[1]);
            uf.unite(s[2], s[3]);
        } else {
            uf.unite(s[1], s[2]);
            uf.unite(s[3], s[0]);
        }
    }
    CircleSet out;
    out.circle_of_edge.assign(d.edge_count, -1);
    // Roots are the smallest edge in each circle; number circles in root order.
    std::vector<int> root_index(d.edge_count, -1);
    for (int e = 0; e < d.edge_count; ++e) {
        int r = uf.find(e);
        if (root_index[r] < 0) root_index[r] = out.circle_count++;
        out.circle_of_edge[e] = root_index[r];
    }
    out.marked_circle = out.circle_of_edge[d.marked_edge];
    return out;
}

ResolutionVector oriented_resolution(const PlanarDiagram& d) {
    ResolutionVector v;
    v.bits.reserve(d.crossings.size());
    for (const Crossing& c : d.crossings) v.bits.push_back(c.sign > 0 ? 0 : 1);
    return v;
}

namespace {

// (crossing, slot) where the edge departs / arrives.
struct EdgeEnds {
    int out_crossing = -1, out_slot = -1;
    int in_crossing = -1, in_slot = -1;
};

std::vector<EdgeEnds> edge_ends(const PlanarDiagram& d) {
    std::vector<EdgeEnds> ends(d.edge_count);
    for (int ci = 0; ci < d.crossing_count(); ++ci) {
        const Crossing& c = d.crossings[ci];
        for (int s = 0; s < 4; ++s) {
            int e = c.slots[s];
            if (is_in_slot(c, s)) {
                ends[e].in_crossing = ci;
                ends[e].in_slot = s;
            } else {
                ends[e].out_crossing = ci;
                ends[e].out_slot = s;
            }
        }
    }
    return ends;
}

bool is_free_circle(const PlanarDiagram& d, int edge) {
    return std::find(d.free_circles.begin(), d.free_circles.end(), edge) != d.free_circles.end();
}

}  // namespace

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2) {
    d1.validate();
    d2.validate();
    const int offset = d1.edge_count;

    PlanarDiagram out;
    out.crossings = d1.crossings;
    for (Crossing c : d2.crossings) {
        for (int& e : c.slots) e += offset;
        out.crossings.push_back(c);
    }
    out.edge_count = d1.edge_count + d2.edge_count;
    out.n_plus = d1.n_plus + d2.n_plus;
    out.n_minus = d1.n_minus + d2.n_minus;
    out.free_circles = d1.free_circles;
    for (int e : d2.free_circles) out.free_circles.push_back(e + offset);

    const int m1 = d1.marked_edge;
    const int m2 = d2.marked_edge + offset;
    const bool free1 = is_free_circle(d1, d1.marked_edge);
    const bool free2 = is_free_circle(d2, d2.marked_edge);

    auto drop_free = [&out](int e) {
        out.free_circles.erase(std::find(out.free_circles.begin(), out.free_circles.end(), e));
    };
    auto compact_edges = [&out]() {
        std::vector<char> used(out.edge_count, 0);
        for (const Crossing& c : out.crossings)
            for (int e : c.slots) used[e] = 1;
        for (int e : out.free_circles) used[e] = 1;
        used[out.marked_edge] = 1;
        std::vector<int> remap(out.edge_count, -1);
        int count = 0;
        for (int e = 0; e < out.edge_count; ++e)
            if (used[e]) remap[e] = count++;
        for (Crossing& c : out.crossings)
            for (int& e : c.slots) e = remap[e];
        for (int& e : out.free_circles) e = remap[e];
        out.marked_edge = remap[out.marked_edge];
        out.edge_count = count;
    };

    if (free2) {
        // d2's marked circle merges into the edge m1; the rest of d2 rides along.
        drop_free(m2);
        out.marked_edge = m1;
        compact_edges();
        out.validate();
        return out;
    }
    if (free1) {
        drop_free(m1);
        out.marked_edge = m2;
        compact_edges();
        out.validate();
        return out;
    }

    // General splice: m1 runs s1 -> t1 and m2 runs s2 -> t2. Reconnect so the
    // strand leaving s1 enters d2 at t2, and the strand leaving s2 returns to t1.
    auto ends = edge_ends(out);
    const EdgeEnds& e1 = ends[m1];
    const EdgeEnds& e2 = ends[m2];
    out.crossings[e2.in_crossing].slots[e2.in_slot] = m1;
    out.crossings[e1.in_crossing].slots[e1.in_slot] = m2;
    out.marked_edge = m1;
    compact_edges();
    out.validate();
    return out;
}

namespace {

using nlohmann::json;

PlanarDiagram pd_from_json_value(const json& j) {
    if (!j.is_object() || !j.contains("pd")) throw ParseError("PD JSON: expected object with \"pd\"");
    const json& pd = j.at("pd");
    if (!pd.is_array()) throw ParseError("PD JSON: \"pd\" must be an array");

    std::vector<std::pair<int, std::array<int, 4>>> raw;  // (sign, slots with original ids)
    std::map<int, int> id_map;
    auto note_edge = [&id_map](int e) { id_map.emplace(e, 0); };

    for (const json& row : pd) {
        if (!row.is_array() || row.size() != 5)
            throw ParseError("PD JSON: each crossing must be [a,b,c,d,\"+\"|\"-\"]");
        std::array<int, 4> slots{};
        for (int s = 0; s < 4; ++s) {
            if (!row[s].is_number_integer()) throw ParseError("PD JSON: edge ids must be integers");
            slots[s] = row[s].get<int>();
            if (slots[s] < 0) throw ParseError("PD JSON: edge ids must be nonnegative");
            note_edge(slots[s]);
        }
        if (!row[4].is_string()) throw ParseError("PD JSON: crossing sign must be \"+\" or \"-\"");
        std::string sgn = row[4].get<std::string>();
        if (sgn != "+" && sgn != "-") throw ParseError("PD JSON: crossing sign must be \"+\" or \"-\"");
        raw.emplace_back(sgn == "+" ? +1 : -1, slots);
    }

    std::vector<int> free_orig;
    if (j.contains("free")) {
        if (!j.at("free").is_array()) throw ParseError("PD JSON: \"free\" must be an array");
        for (const json& f : j.at("free")) {
            if (!f.is_number_integer()) throw ParseError("PD JSON: free circle ids must be integers");
            free_orig.push_back(f.get<int>());
            note_edge(free_orig.back());
        }
    }
    if (id_map.empty()) throw ParseError("PD JSON: empty diagram");

    int next = 0;
    for (auto& [orig, compact] : id_map) compact = next++;

    PlanarDiagram d;
    d.edge_count = next;
    for (auto& [sign, slots] : raw) {
        Crossing c;
        c.sign = sign;
        for (int s = 0; s < 4; ++s) c.slots[s] = id_map.at(slots[s]);
        d.crossings.push_back(c);
        (sign > 0 ? d.n_plus : d.n_minus)++;
    }
    for (int f : free_orig) d.free_circles.push_back(id_map.at(f));

    if (j.contains("marked")) {
        if (!j.at("marked").is_number_integer()) throw ParseError("PD JSON: \"marked\" must be an integer");
        auto it = id_map.find(j.at("marked").get<int>());
        if (it == id_map.end()) throw ParseError("PD JSON: marked edge is not an edge of the diagram");
        d.marked_edge = it->second;
    } else {
        d.marked_edge = 0;  // lowest edge id
    }
    try {
        d.validate();
    } catch (const DomainError& err) {
        throw ParseError(std::string("PD JSON: ") + err.what());
    }
    return d;
}

}  // namespace

PlanarDiagram parse_pd_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("PD JSON: ") + e.what());
    }
    return pd_from_json_value(j);
}

std::string to_pd_json(const PlanarDiagram& d) {
    json pd = json::array();
    for (const Crossing& c : d.crossings) {
        json row = json::array();
        for (int s = 0; s < 4; ++s) row.push_back(c.slots[s]);
        row.push_back(c.sign > 0 ? "+" : "-");
        pd.push_back(row);
    }
    json j;
    j["pd"] = pd;
    if (!d.free_circles.empty()) j["free"] = d.free_circles;
    j["marked"] = d.marked_edge;
    return j.dump();
}

PlanarDiagram parse_diagram(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_pd_json(text);
    return braid_to_diagram(parse_braid(text));
}

}  // namespace khpages
