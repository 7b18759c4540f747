#include "ringline/chains.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ringline/errors.hpp"
#include "ringline/hash.hpp"

namespace ringline {

namespace {

constexpr std::uint64_t kSampleSeed = 0x4348414e53ULL;

// Multiples of 1, indexed 0..char-1; the canonical image of the prime field.
std::vector<int> one_multiples(const RingTable& ring) {
    std::vector<int> m(static_cast<size_t>(ring.characteristic));
    m[0] = ring.zero;
    for (size_t i = 1; i < m.size(); ++i) m[i] = ring.add(m[i - 1], ring.one);
    return m;
}

// f(x) for a monic modulus with prime-field coefficients (constant term
// first); the coefficients are central, so Horner order is immaterial.
int eval_modulus(const RingTable& ring, const std::vector<int>& modulus,
                 const std::vector<int>& ones, int x) {
    int acc = ring.zero;
    for (size_t i = modulus.size(); i-- > 0;) acc = ring.add(ring.mul(acc, x), ones[modulus[i]]);
    return acc;
}

SubfieldEmbedding finish_embedding(RingPtr field, RingPtr ring, std::vector<int> map,
                                   std::string strategy, std::string note) {
    SubfieldEmbedding emb;
    emb.field = std::move(field);
    emb.ring = std::move(ring);
    emb.map = std::move(map);
    emb.strategy = std::move(strategy);
    emb.note = std::move(note);
    emb.image = emb.map;
    std::sort(emb.image.begin(), emb.image.end());
    emb.image_mask.assign(emb.ring->order, 0);
    for (int x : emb.image) {
        if (x < 0 || x >= emb.ring->order)
            throw std::invalid_argument("embedding image out of range");
        emb.image_mask[x] = 1;
    }
    verify_embedding(emb);
    return emb;
}

}  // namespace

void verify_embedding(const SubfieldEmbedding& emb) {
    if (!emb.field || !emb.ring) throw std::invalid_argument("embedding lacks its rings");
    if (!emb.field->is_field()) throw std::invalid_argument("embedding domain is not a field");
    if (static_cast<int>(emb.map.size()) != emb.field->order)
        throw std::invalid_argument("embedding map has wrong size");
    std::vector<char> seen(emb.ring->order, 0);
    for (int x : emb.map) {
        if (x < 0 || x >= emb.ring->order) throw std::invalid_argument("embedding image out of range");
        if (seen[x]) throw std::invalid_argument("embedding map is not injective");
        seen[x] = 1;
    }
    if (!verify_hom({emb.field, emb.ring, emb.map}))
        throw std::invalid_argument("embedding map is not a unital ring homomorphism");
}

SubfieldEmbedding embed_prime_field(const RingPtr& ring) {
    long long p = ring->characteristic;
    if (!is_prime(p))
        throw std::invalid_argument("prime-field strategy needs a prime characteristic, got " +
                                    std::to_string(p));
    RingPtr field = build_ring("GF(" + std::to_string(p) + ")");
    return finish_embedding(field, ring, one_multiples(*ring), "prime",
                            "multiples of 1, characteristic " + std::to_string(p));
}

SubfieldEmbedding embed_constants(const RingPtr& ring) {
    if (!ring->base || ring->base_embedding.empty())
        throw std::invalid_argument("ring has no structural coefficient subring");
    if (!ring->base->is_field())
        throw std::invalid_argument("structural coefficient subring is not a field");
    return finish_embedding(ring->base, ring, ring->base_embedding, "constants",
                            "coefficient field " + ring->base->spec);
}

SubfieldEmbedding embed_generator_witness(const RingPtr& ring, const RingPtr& field,
                                          int generator_image) {
    if (!field->is_field()) throw std::invalid_argument("witness field is not a field");
    if (!field->gf)
        throw std::invalid_argument("generator witness needs a GF(...) field with a known modulus");
    if (generator_image < 0 || generator_image >= ring->order)
        throw std::invalid_argument("generator image out of range");
    if (ring->characteristic != field->characteristic)
        throw std::invalid_argument("characteristics differ: field " +
                                    std::to_string(field->characteristic) + ", ring " +
                                    std::to_string(ring->characteristic));
    const auto& gf = *field->gf;
    std::vector<int> ones = one_multiples(*ring);
    if (eval_modulus(*ring, gf.modulus, ones, generator_image) != ring->zero)
        throw std::invalid_argument("element " + ring->label(generator_image) +
                                    " is not a root of the field modulus");
    // powers 1, g, ..., g^(d-1)
    std::vector<int> pow(gf.d);
    pow[0] = ring->one;
    for (int i = 1; i < gf.d; ++i) pow[i] = ring->mul(pow[i - 1], generator_image);
    // field element index = sum of digit_i * p^i, digit 0 the constant term
    std::vector<int> map(field->order);
    for (int e = 0; e < field->order; ++e) {
        int value = ring->zero;
        long long rest = e;
        for (int i = 0; i < gf.d; ++i) {
            int digit = static_cast<int>(rest % gf.p);
            rest /= gf.p;
            value = ring->add(value, ring->mul(ones[digit], pow[i]));
        }
        map[e] = value;
    }
    return finish_embedding(field, ring, std::move(map), "witness",
                            "generator image " + ring->label(generator_image));
}

SubfieldEmbedding embed_field_by_search(const RingPtr& ring, const RingPtr& field) {
    if (!field->is_field()) throw std::invalid_argument("search target is not a field");
    if (!field->gf)
        throw std::invalid_argument("embedding search needs a GF(...) field with a known modulus");
    if (ring->characteristic != field->characteristic)
        throw std::invalid_argument("no copy of " + field->spec + " in " + ring->spec +
                                    ": characteristics differ");
    std::vector<int> ones = one_multiples(*ring);
    for (int x = 0; x < ring->order; ++x) {
        if (eval_modulus(*ring, field->gf->modulus, ones, x) != ring->zero) continue;
        SubfieldEmbedding emb = embed_generator_witness(ring, field, x);
        emb.strategy = "search";
        return emb;
    }
    throw std::invalid_argument("no copy of " + field->spec + " in " + ring->spec +
                                ": the modulus has no root");
}

SubfieldEmbedding embed_wedderburn_complement(const RingPtr& ring) {
    if (!ring->local_ring)
        throw std::invalid_argument("wedderburn-complement strategy needs a local ring");
    QuotientResult q = quotient_by_radical(ring);
    long long order = q.quotient->order;
    long long p;
    int e;
    if (!q.quotient->is_field() || !prime_power(order, p, e))
        throw std::logic_error("residue ring of a local ring is not a field");
    RingPtr field = build_ring("GF(" + std::to_string(order) + ")");
    SubfieldEmbedding emb = embed_field_by_search(ring, field);
    emb.strategy = "wedderburn";
    emb.note = "complement of the radical, " + emb.note;
    return emb;
}

SubfieldEmbedding load_embedding_witness(const RingPtr& ring, const std::string& path,
                                         const BuildOptions& options) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open witness file '" + path + "'", 1, 1);
    std::string field_spec;
    long long generator = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "field") {
            std::string rest;
            std::getline(ls, rest);
            size_t begin = rest.find_first_not_of(" \t");
            if (begin == std::string::npos) throw ParseError("missing field spec", lineno, 1);
            size_t end = rest.find_last_not_of(" \t\r");
            field_spec = rest.substr(begin, end - begin + 1);
        } else if (key == "generator") {
            if (!(ls >> generator) || generator < 0)
                throw ParseError("bad generator index", lineno, 1);
        } else {
            throw ParseError("unknown witness key '" + key + "'", lineno, 1);
        }
    }
    if (field_spec.empty()) throw ParseError("witness file lacks a 'field' line", lineno + 1, 1);
    if (generator < 0) throw ParseError("witness file lacks a 'generator' line", lineno + 1, 1);
    RingPtr field = build_ring(field_spec, options);
    SubfieldEmbedding emb = embed_generator_witness(ring, field, static_cast<int>(generator));
    emb.note = "witness file " + path + ", " + emb.note;
    return emb;
}

SubfieldEmbedding embed_subfield(const RingPtr& ring, const std::string& field_arg,
                                 const BuildOptions& options) {
    if (field_arg == "prime") return embed_prime_field(ring);
    if (field_arg == "constants") return embed_constants(ring);
    if (field_arg == "wedderburn") return embed_wedderburn_complement(ring);
    bool looks_like_spec = true;
    RingSpecPtr spec;
    try {
        spec = parse_ring_spec(field_arg);
    } catch (const ParseError&) {
        looks_like_spec = false;
    }
    if (looks_like_spec) return embed_field_by_search(ring, build_ring(*spec, options));
    return load_embedding_witness(ring, field_arg, options);
}

std::array<int, 3> standard_triple(const ProjLine& line) {
    const RingTable& ring = *line.ring;
    std::array<int, 3> ids{};
    const std::pair<int, int> reps[3] = {{ring.one, ring.zero},
                                         {ring.zero, ring.one},
                                         {ring.one, ring.one}};
    for (int i = 0; i < 3; ++i) {
        ids[i] = line.id_of_rep(canonical_point(ring, reps[i].first, reps[i].second));
        if (ids[i] < 0) throw std::logic_error("standard point missing from the line");
    }
    return ids;
}

long long normaliser_index(const RingTable& ring, const SubfieldEmbedding& emb) {
    std::vector<int> kstar;
    for (int x : emb.image)
        if (x != ring.zero) kstar.push_back(x);
    long long n_size = 0;
    for (int n : ring.units) {
        int n_inv = ring.inv(n);
        bool normalises = true;
        for (int k : kstar) {
            if (!emb.image_mask[ring.mul(ring.mul(n_inv, k), n)]) {
                normalises = false;
                break;
            }
        }
        if (normalises) ++n_size;
    }
    long long total = static_cast<long long>(ring.units.size());
    if (n_size == 0 || total % n_size != 0)
        throw std::logic_error("normaliser size does not divide the unit group order");
    return total / n_size;
}

namespace {

std::vector<int> distant_neighbours(const ProjLine& line, int p) {
    std::vector<int> out;
    for (int q = 0; q < line.point_count(); ++q)
        if (line.distant.get(p, q)) out.push_back(q);
    return out;
}

}  // namespace

ChainGeometry build_chain_geometry(const ProjLine& line, const SubfieldEmbedding& emb,
                                   const ChainGeometryOptions& options) {
    if (emb.ring->spec != line.ring->spec)
        throw std::invalid_argument("embedding targets a different ring than the line");
    const RingTable& ring = *line.ring;
    const RingTable& field = *emb.field;

    ChainGeometry geo;
    geo.ring = line.ring;
    geo.embedding = emb;
    geo.line = line;

    // Standard chain: the embedded projective line over K.
    std::set<int> chain_ids;
    for (int a = 0; a < field.order; ++a) {
        for (int b = 0; b < field.order; ++b) {
            if (a == field.zero && b == field.zero) continue;
            int id = line.id_of_rep(canonical_point(ring, emb.map[a], emb.map[b]));
            if (id < 0) throw std::logic_error("embedded field pair is not a line point");
            chain_ids.insert(id);
        }
    }
    geo.standard_chain.assign(chain_ids.begin(), chain_ids.end());
    if (static_cast<long long>(geo.standard_chain.size()) != field.order + 1)
        throw std::logic_error("standard chain does not have |K|+1 points");

    for (const Mat2& g : gl2_generators(ring)) geo.generator_perms.push_back(point_permutation(line, g));
    geo.chains = orbit_blocks({geo.standard_chain}, geo.generator_perms, options.orbit_cap);
    const long long b = static_cast<long long>(geo.chains.size());
    const int v = line.point_count();

    // Tally every 3-subset of every chain and every pair on a chain; chains
    // carry only mutually distant points, so the keys are distant triples.
    std::unordered_map<std::vector<int>, long long, VecHash> triples;
    std::unordered_set<long long> covered_pairs;
    for (const auto& chain : geo.chains) {
        const int n = static_cast<int>(chain.size());
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!line.distant.get(chain[i], chain[j]))
                    throw std::logic_error("chain contains a non-distant pair");
                covered_pairs.insert(static_cast<long long>(chain[i]) * v + chain[j]);
                for (int k = j + 1; k < n; ++k) ++triples[{chain[i], chain[j], chain[k]}];
            }
        }
    }

    std::array<int, 3> base = standard_triple(line);
    std::vector<int> base_key(base.begin(), base.end());
    std::sort(base_key.begin(), base_key.end());
    auto base_it = triples.find(base_key);
    geo.lambda3 = base_it == triples.end() ? 0 : base_it->second;
    if (geo.lambda3 <= 0) throw std::logic_error("no chain through the standard triple");

    geo.normaliser = normaliser_index(ring, emb);
    if (geo.normaliser != geo.lambda3)
        throw std::logic_error("chain count through a distant triple (" +
                               std::to_string(geo.lambda3) + ") differs from the normaliser index (" +
                               std::to_string(geo.normaliser) + ")");

    if (v <= options.exhaustive_limit) {
        long long ordered = distant_ordered_triple_count(line);
        if (ordered % 6 != 0) throw std::logic_error("distant triple count is not divisible by 6");
        if (static_cast<long long>(triples.size()) != ordered / 6)
            throw std::logic_error("some mutually distant triple lies on no chain");
        for (const auto& [key, count] : triples)
            if (count != geo.lambda3)
                throw std::logic_error("chain count is not constant over distant triples");
        for (int i = 0; i < v; ++i)
            for (int j = i + 1; j < v; ++j)
                if (covered_pairs.count(static_cast<long long>(i) * v + j) !=
                    static_cast<size_t>(line.distant.get(i, j) ? 1 : 0))
                    throw std::logic_error("chain pair coverage disagrees with distance");
    } else {
        std::mt19937_64 rng(kSampleSeed);
        auto pick = [&](const std::vector<int>& pool) {
            return pool[static_cast<size_t>(rng() % pool.size())];
        };
        for (int trial = 0; trial < options.sample_count; ++trial) {
            int p = static_cast<int>(rng() % v);
            std::vector<int> near_p = distant_neighbours(line, p);
            if (near_p.empty()) continue;
            int q = pick(near_p);
            std::vector<int> common;
            for (int r : near_p)
                if (line.distant.get(q, r)) common.push_back(r);
            if (common.empty()) continue;
            int r = pick(common);
            std::vector<int> key{p, q, r};
            std::sort(key.begin(), key.end());
            auto it = triples.find(key);
            if (it == triples.end() || it->second != geo.lambda3)
                throw std::logic_error("sampled distant triple violates the chain count");
        }
        for (int trial = 0; trial < options.sample_count; ++trial) {
            int i = static_cast<int>(rng() % v);
            int j = static_cast<int>(rng() % v);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            bool covered = covered_pairs.count(static_cast<long long>(i) * v + j) > 0;
            if (covered != line.distant.get(i, j))
                throw std::logic_error("sampled pair coverage disagrees with distance");
        }
    }

    geo.gl2 = gl2_order(line.ring);
    if (geo.gl2 % Int(b) != 0)
        throw std::logic_error("chain count does not divide the group order");
    geo.chain_stabiliser = geo.gl2 / Int(b);
    return geo;
}

FChainResult f_chain_intersection(const ChainGeometry& geo, const std::array<int, 3>& triple) {
    const ProjLine& line = geo.line;
    const RingTable& ring = *geo.ring;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (triple[i] == triple[j] || !line.distant.get(triple[i], triple[j]))
                throw std::invalid_argument("triple is not mutually distant");

    FChainResult res;
    bool first = true;
    for (const auto& chain : geo.chains) {
        bool contains_all = true;
        for (int p : triple)
            if (!std::binary_search(chain.begin(), chain.end(), p)) {
                contains_all = false;
                break;
            }
        if (!contains_all) continue;
        if (first) {
            res.intersection = chain;
            first = false;
        } else {
            std::vector<int> tmp;
            std::set_intersection(res.intersection.begin(), res.intersection.end(), chain.begin(),
                                  chain.end(), std::back_inserter(tmp));
            res.intersection = std::move(tmp);
        }
    }
    if (first) throw std::logic_error("no chain through a mutually distant triple");

    // F = { x : a x a^-1 stays in K for every unit a }.
    for (int x : geo.embedding.image) {
        bool fixed = true;
        for (int a : ring.units) {
            if (!geo.embedding.image_mask[ring.mul(ring.mul(a, x), ring.inv(a))]) {
                fixed = false;
                break;
            }
        }
        if (fixed) res.f_elements.push_back(x);
    }
    std::vector<char> f_mask(ring.order, 0);
    for (int x : res.f_elements) f_mask[x] = 1;
    for (int x : res.f_elements) {
        bool has_inverse = x == ring.zero || (ring.is_unit(x) && f_mask[ring.inv(x)]);
        if (!has_inverse) throw std::logic_error("F is not closed under inversion");
        for (int y : res.f_elements)
            if (!f_mask[ring.add(x, y)] || !f_mask[ring.mul(x, y)])
                throw std::logic_error("F is not closed under the ring operations");
    }

    // gamma = diag(x, y) * M maps the standard triple to the given one.
    auto [a, b] = line.points[triple[0]];
    auto [c, d] = line.points[triple[1]];
    auto [e, f] = line.points[triple[2]];
    Mat2 m{a, b, c, d};
    if (!matrix_invertible(ring, m))
        throw std::logic_error("distant pair does not stack to an invertible matrix");
    Mat2 mi = mat_inverse(ring, m);
    int x = ring.add(ring.mul(e, mi.a), ring.mul(f, mi.c));
    int y = ring.add(ring.mul(e, mi.b), ring.mul(f, mi.d));
    if (!ring.is_unit(x) || !ring.is_unit(y))
        throw std::logic_error("triple coordinates are not units despite distance");
    Mat2 gamma = mat_mul(ring, Mat2{x, ring.zero, ring.zero, y}, m);

    std::set<int> ids;
    for (int p : res.f_elements) {
        for (int q : res.f_elements) {
            if (p == ring.zero && q == ring.zero) continue;
            int ra = ring.add(ring.mul(p, gamma.a), ring.mul(q, gamma.c));
            int rb = ring.add(ring.mul(p, gamma.b), ring.mul(q, gamma.d));
            int id = line.id_of_rep(canonical_point(ring, ra, rb));
            if (id < 0) throw std::logic_error("F-chain pair is not a line point");
            ids.insert(id);
        }
    }
    std::vector<int> f_chain(ids.begin(), ids.end());
    if (f_chain.size() != res.f_elements.size() + 1)
        throw std::logic_error("F-chain does not have |F|+1 points");
    if (f_chain != res.intersection)
        throw std::logic_error("chain intersection is not the F-chain through the triple");
    return res;
}

Design design_from_chain_geometry(const ChainGeometry& geo) {
    Design d;
    d.v = geo.line.point_count();
    d.t = 3;
    d.classes = geo.line.classes;
    d.blocks = geo.chains;
    return d;
}

ChainProfile chain_geometry_profile(const ChainGeometry& geo) {
    const ProjLine& line = geo.line;
    ChainProfile p;
    p.v = line.point_count();
    p.s1 = static_cast<long long>(geo.ring->radical.size());
    p.s2 = p.v - geo.ring->order;
    p.k = geo.embedding.field->order + 1;
    p.lambda3 = geo.lambda3;
    p.s1_equals_s2 = (p.s1 == p.s2);
    p.local_ring = geo.ring->local_ring;

    // A parallel-transversal 3-set lies on a chain exactly when it is mutually
    // distant, so coverage of all of them comes down to "different class
    // implies distant" (vacuous with fewer than three classes).
    p.transversal_triples_covered = true;
    if (line.classes.size() >= 3) {
        for (int i = 0; i < p.v && p.transversal_triples_covered; ++i)
            for (int j = i + 1; j < p.v; ++j)
                if (line.class_of[i] != line.class_of[j] && !line.distant.get(i, j)) {
                    p.transversal_triples_covered = false;
                    break;
                }
    }
    return p;
}

SperaOutcome spera_from_chain_geometry(const ChainGeometry& geo, int t, int drop,
                                       long long orbit_cap, long long enum_cap) {
    if (drop < 0 || drop > 3) throw std::invalid_argument("drop must be between 0 and 3");
    std::array<int, 3> anchors = standard_triple(geo.line);
    std::vector<int> base = geo.standard_chain;
    for (int i = 0; i < drop; ++i) {
        auto it = std::find(base.begin(), base.end(), anchors[i]);
        if (it == base.end()) throw std::logic_error("standard chain misses a standard point");
        base.erase(it);
    }

    SperaInput in;
    in.v = geo.line.point_count();
    in.classes = geo.line.classes;
    in.generators = geo.generator_perms;
    in.base_block = std::move(base);
    in.t = t;
    in.group_order = geo.gl2;
    // Over a local ring, parallel-transversal t-sets with t <= 3 are exactly
    // the mutually distant ones, on which GL2 acts transitively.
    in.assume_transversal_transitivity = geo.ring->local_ring && t <= 3;
    in.orbit_cap = orbit_cap;
    in.enum_cap = enum_cap;
    return spera_construct(in);
}

Design truncated_chain_design(const ChainGeometry& geo, int drop, long long orbit_cap,
                              long long enum_cap) {
    if (drop < 1 || drop > 3) throw std::invalid_argument("drop must be 1, 2, or 3");
    if (!geo.ring->local_ring)
        throw std::invalid_argument("truncated chains need a local algebra");
    const long long q = geo.embedding.field->order;
    if (q <= drop + 1)
        throw std::invalid_argument("field order " + std::to_string(q) +
                                    " is too small to drop " + std::to_string(drop) + " points");
    SperaOutcome out = spera_from_chain_geometry(geo, 3, drop, orbit_cap, enum_cap);
    if (!out.ok)
        throw std::logic_error("truncated chain construction failed: " + out.message);
    long long expect_k = q + 1 - drop;
    long long expect_lambda = drop == 1   ? q - 2
                              : drop == 2 ? (q - 2) * (q - 3) / 2
                                          : (q - 2) * (q - 3) * (q - 4) / 6;
    const DesignParams& params = out.certification.params;
    if (params.k != expect_k || params.lambda_t != expect_lambda)
        throw std::logic_error("truncated design parameters (" + std::to_string(params.k) + "," +
                               std::to_string(params.lambda_t) + ") do not match the table (" +
                               std::to_string(expect_k) + "," + std::to_string(expect_lambda) + ")");
    return out.design;
}

Design moebius_design(long long q, int h, const BuildOptions& options) {
    long long p;
    int e;
    if (!prime_power(q, p, e)) throw std::invalid_argument("q must be a prime power");
    if (h < 1) throw std::invalid_argument("h must be at least 1");
    Int order = int_pow(Int(q), static_cast<unsigned>(h));
    if (order > options.order_cap)
        throw CapError("GF(" + order.str() + ") exceeds the ring order cap");
    RingPtr ring = build_ring("GF(" + order.str() + ")", options);
    RingPtr field = build_ring("GF(" + std::to_string(q) + ")", options);
    SubfieldEmbedding emb = embed_field_by_search(ring, field);
    ProjLine line = build_line(ring);
    ChainGeometry geo = build_chain_geometry(line, emb);
    return design_from_chain_geometry(geo);
}

}  // namespace ringline
