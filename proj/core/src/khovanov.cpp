#include "khpages/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "khpages/errors.hpp"
#include "khpages/pages.hpp"

namespace khpages {

namespace {

constexpr int kMaxCrossings = 20;

struct VertexData {
    CircleSet circles;
    std::vector<int> unmarked;       // circle index -> label bit position, marked = -1
    std::vector<int> circle_order;   // label bit position -> circle index
};

VertexData vertex_data(const PlanarDiagram& d, uint64_t mask) {
    VertexData v;
    v.circles = resolve(d, ResolutionVector::from_mask(mask, d.crossing_count()));
    v.unmarked.assign(static_cast<size_t>(v.circles.circle_count), -1);
    for (int c = 0, bit = 0; c < v.circles.circle_count; ++c) {
        if (c == v.circles.marked_circle) continue;
        v.unmarked[static_cast<size_t>(c)] = bit++;
        v.circle_order.push_back(c);
    }
    return v;
}

}  // namespace

int CubeComplex::generator_at(uint64_t vertex, uint32_t label_bits) const {
    return static_cast<int>(vertex_base[vertex] + label_bits);
}

CubeComplex build_reduced_complex(const PlanarDiagram& d, int threads) {
    d.validate();
    const int m = d.crossing_count();
    if (m > kMaxCrossings) throw DomainError("build_reduced_complex: too many crossings");
    const uint64_t vertex_count = uint64_t{1} << m;
    if (threads < 1) threads = 1;

    CubeComplex cube;
    cube.diagram = d;
    cube.vertex_base.assign(vertex_count, 0);
    cube.vertex_circles.assign(vertex_count, 0);

    std::vector<VertexData> data(vertex_count);
    auto fill_vertices = [&](uint64_t begin, uint64_t end) {
        for (uint64_t I = begin; I < end; ++I) {
            data[I] = vertex_data(d, I);
            cube.vertex_circles[I] = static_cast<uint8_t>(data[I].circles.circle_count);
        }
    };
    if (threads == 1 || vertex_count < 64) {
        fill_vertices(0, vertex_count);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (vertex_count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            uint64_t begin = chunk * static_cast<uint64_t>(t);
            uint64_t end = std::min(vertex_count, begin + chunk);
            if (begin < end) pool.emplace_back(fill_vertices, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    int64_t total = 0;
    for (uint64_t I = 0; I < vertex_count; ++I) {
        cube.vertex_base[I] = total;
        total += int64_t{1} << (cube.vertex_circles[I] - 1);
    }
    if (total > (int64_t{1} << 30)) throw DomainError("build_reduced_complex: cube too large");
    const int n_gens = static_cast<int>(total);

    cube.complex.f.resize(static_cast<size_t>(n_gens));
    cube.complex.aux.resize(static_cast<size_t>(n_gens));
    cube.complex.d.assign(static_cast<size_t>(n_gens), {});
    cube.vertex_of_generator.resize(static_cast<size_t>(n_gens));
    cube.labels_of_generator.resize(static_cast<size_t>(n_gens));

    auto fill_generators = [&](uint64_t begin, uint64_t end) {
        for (uint64_t I = begin; I < end; ++I) {
            const VertexData& vd = data[I];
            const int circles = vd.circles.circle_count;
            const int weight = std::popcount(I);
            const int h = weight - d.n_minus;
            const int64_t base = cube.vertex_base[I];
            const uint32_t label_count = uint32_t{1} << (circles - 1);
            for (uint32_t bits = 0; bits < label_count; ++bits) {
                int g = static_cast<int>(base + bits);
                int plus = std::popcount(bits);
                cube.complex.f[static_cast<size_t>(g)] = h;
                cube.complex.aux[static_cast<size_t>(g)] =
                    (2 * plus - circles) + weight + d.n_plus - 2 * d.n_minus + 1;
                cube.vertex_of_generator[static_cast<size_t>(g)] = I;
                cube.labels_of_generator[static_cast<size_t>(g)] = bits;
            }

            // Differential along each cube edge I -> I | (1 << j).
            for (int j = 0; j < m; ++j) {
                if ((I >> j) & 1) continue;
                const uint64_t J = I | (uint64_t{1} << j);
                const VertexData& wd = data[J];

                // Circle correspondence: resolutions differ at one crossing,
                // so circles either persist, merge (two -> one), or split.
                std::vector<int> target_of(static_cast<size_t>(vd.circles.circle_count), -1);
                std::vector<int> source_of(static_cast<size_t>(wd.circles.circle_count), -1);
                int merge_a = -1, merge_b = -1, merge_t = -1;
                int split_s = -1, split_t1 = -1, split_t2 = -1;
                for (int e = 0; e < d.edge_count; ++e) {
                    int a = vd.circles.circle_of_edge[e];
                    int b = wd.circles.circle_of_edge[e];
                    if (target_of[a] == -1) target_of[a] = b;
                    else if (target_of[a] != b) {
                        split_s = a;
                        split_t1 = std::min(target_of[a], b);
                        split_t2 = std::max(target_of[a], b);
                    }
                    if (source_of[b] == -1) source_of[b] = a;
                    else if (source_of[b] != a) {
                        merge_t = b;
                        merge_a = std::min(source_of[b], a);
                        merge_b = std::max(source_of[b], a);
                    }
                }
                const bool is_merge = merge_t >= 0;
                if (!is_merge && split_s < 0)
                    throw DomainError(
                        "build_reduced_complex: cube edge is neither a merge nor a split "
                        "(rotation data is not planar)");

                const int src_marked = vd.circles.marked_circle;
                for (uint32_t bits = 0; bits < label_count; ++bits) {
                    const int g = static_cast<int>(base + bits);
                    auto label_plus = [&](int circle) {
                        if (circle == src_marked) return false;
                        return ((bits >> vd.unmarked[static_cast<size_t>(circle)]) & 1) != 0;
                    };
                    auto target_bits_for = [&](auto&& label_of_target) {
                        uint32_t tb = 0;
                        for (size_t pos = 0; pos < wd.circle_order.size(); ++pos) {
                            if (label_of_target(wd.circle_order[pos])) tb |= uint32_t{1} << pos;
                        }
                        return tb;
                    };

                    if (is_merge) {
                        bool pa = label_plus(merge_a);
                        bool pb = label_plus(merge_b);
                        if (!pa && !pb) continue;  // (minus, minus) -> 0
                        bool merged_plus = pa && pb;
                        uint32_t tb = target_bits_for([&](int t) {
                            if (t == merge_t) return merged_plus;
                            return label_plus(source_of[static_cast<size_t>(t)]);
                        });
                        cube.complex.d[static_cast<size_t>(g)].push_back(
                            cube.generator_at(J, tb));
                    } else {
                        bool ps = label_plus(split_s);
                        if (!ps) {  // minus -> (minus, minus)
                            uint32_t tb = target_bits_for([&](int t) {
                                if (t == split_t1 || t == split_t2) return false;
                                return label_plus(source_of[static_cast<size_t>(t)]);
                            });
                            cube.complex.d[static_cast<size_t>(g)].push_back(
                                cube.generator_at(J, tb));
                        } else {  // plus -> (plus, minus) + (minus, plus)
                            for (int keep : {split_t1, split_t2}) {
                                uint32_t tb = target_bits_for([&](int t) {
                                    if (t == split_t1 || t == split_t2) return t == keep;
                                    return label_plus(source_of[static_cast<size_t>(t)]);
                                });
                                cube.complex.d[static_cast<size_t>(g)].push_back(
                                    cube.generator_at(J, tb));
                            }
                        }
                    }
                }
            }
        }
    };

    if (threads == 1 || vertex_count < 64) {
        fill_generators(0, vertex_count);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (vertex_count + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            uint64_t begin = chunk * static_cast<uint64_t>(t);
            uint64_t end = std::min(vertex_count, begin + chunk);
            if (begin < end) pool.emplace_back(fill_generators, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (auto& row : cube.complex.d) std::sort(row.begin(), row.end());
    return cube;
}

BigradedRanks kh_homology(const CubeComplex& cube) {
    auto pages = compute_pages(cube.complex, 2);
    return pages.back().ranks;
}

BigradedRanks kh_homology(const PlanarDiagram& d, int threads) {
    return kh_homology(build_reduced_complex(d, threads));
}

std::string poincare_polynomial(const BigradedRanks& table) {
    if (table.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto [hq, rank] : table) {
        if (rank == 0) continue;
        if (!first) out += " + ";
        first = false;
        if (rank != 1) out += std::to_string(rank);
        out += "h^" + std::to_string(hq.first) + "q^" + std::to_string(hq.second);
    }
    return first ? "0" : out;
}

DeltaSupport delta_support(const BigradedRanks& table) {
    DeltaSupport out;
    for (auto [hq, rank] : table) {
        if (rank == 0) continue;
        out.twice_deltas.push_back(hq.second - 2 * hq.first);  // 2*(q/2 - h)
    }
    std::sort(out.twice_deltas.begin(), out.twice_deltas.end());
    out.twice_deltas.erase(std::unique(out.twice_deltas.begin(), out.twice_deltas.end()),
                           out.twice_deltas.end());
    if (!out.twice_deltas.empty()) {
        // Within one table the q parity is constant, so deltas live on a unit
        // lattice even when they are half-integers.
        out.width = (out.twice_deltas.back() - out.twice_deltas.front()) / 2 + 1;
    }
    return out;
}

LaurentPoly graded_euler_characteristic(const CubeComplex& cube) {
    LaurentPoly chi;
    for (int g = 0; g < cube.complex.size(); ++g) {
        chi.add_term(cube.complex.f[static_cast<size_t>(g)] % 2 ? -1 : 1,
                     cube.complex.aux[static_cast<size_t>(g)]);
    }
    return chi;
}

}  // namespace khpages
