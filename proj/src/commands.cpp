#include "ringline/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringline/action.hpp"
#include "ringline/chains.hpp"
#include "ringline/codes.hpp"
#include "ringline/designs.hpp"
#include "ringline/errors.hpp"
#include "ringline/projline.hpp"
#include "ringline/ring.hpp"
#include "ringline/ringspec.hpp"

namespace ringline {

namespace {

using json = nlohmann::ordered_json;

// Thrown by handlers to request a specific exit code after the message has
// been routed appropriately.
struct CliFailure {
    int code;
    std::string message;
};

std::string element_set(const RingTable& ring, const std::vector<int>& elements) {
    if (elements.size() > 24) return "#" + std::to_string(elements.size());
    std::string s = "{";
    for (size_t i = 0; i < elements.size(); ++i) {
        if (i) s += ",";
        s += ring.label(elements[i]);
    }
    return s + "}";
}

std::string signature_text(const std::vector<std::pair<int, long long>>& sig) {
    std::string s = "[";
    for (size_t i = 0; i < sig.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(sig[i].first) + "," + std::to_string(sig[i].second) + ")";
    }
    return s + "]";
}

std::string params_text(const DesignParams& p) {
    std::ostringstream os;
    os << p.t << "-(" << p.s << "," << p.k << "," << p.lambda_t << ")";
    return os.str();
}

// All lambda_i for a certified design; integral by the derived-parameter
// theorem, so any remainder is an internal error.
std::vector<long long> lambda_row(const DesignParams& p) {
    std::vector<long long> out;
    for (int i = 0; i <= p.t; ++i) {
        Rat l = derive_lambda_i(p, i);
        if (l.denominator() != 1)
            throw std::logic_error("non-integral lambda on a certified design");
        out.push_back(to_ll(l.numerator()));
    }
    return out;
}

json params_json(const DesignParams& p) {
    json j;
    j["t"] = p.t;
    j["v"] = p.v;
    j["s"] = p.s;
    j["k"] = p.k;
    j["lambda_t"] = p.lambda_t;
    j["b"] = p.b;
    j["r"] = p.r;
    j["transversal"] = p.transversal;
    return j;
}

json violations_json(const std::vector<Violation>& violations) {
    json arr = json::array();
    for (const auto& v : violations) {
        json j;
        j["axiom"] = std::string(1, v.axiom);
        j["level"] = v.level;
        j["message"] = v.message;
        j["witness_points"] = v.witness_points;
        j["counts"] = v.counts;
        arr.push_back(j);
    }
    return arr;
}

std::string violations_text(const std::vector<Violation>& violations) {
    std::ostringstream os;
    for (const auto& v : violations) {
        os << "FAIL axiom " << v.axiom;
        if (v.axiom == 'C') os << " level " << v.level;
        os << ": " << v.message << "\n";
    }
    return os.str();
}

struct CliContext {
    BuildOptions build;
    bool json_out = false;
    std::ostream* out;
    std::ostream* err;

    void emit(const json& j, const std::string& plain) const {
        if (json_out)
            *out << j.dump(2) << "\n";
        else
            *out << plain;
    }
};

void cmd_ring_info(const CliContext& ctx, const std::string& spec_text) {
    RingPtr ring = build_ring(spec_text, ctx.build);
    auto quotient = quotient_by_radical(ring);
    auto sig = wedderburn_signature(*quotient.quotient);
    Int gl2 = gl2_order(ring);
    Int points = count_points(ring);

    json j;
    j["command"] = "ring info";
    j["ring"] = ring->spec;
    j["order"] = ring->order;
    j["characteristic"] = ring->characteristic;
    j["commutative"] = ring->commutative;
    j["local"] = ring->local_ring;
    j["units"] = ring->units;
    j["radical"] = ring->radical;
    json sig_j = json::array();
    for (auto [m, q] : sig) sig_j.push_back({m, q});
    j["wedderburn"] = sig_j;
    j["gl2_order"] = gl2.str();
    j["point_count"] = points.str();

    std::ostringstream os;
    os << "order=" << ring->order << " char=" << ring->characteristic
       << " commutative=" << (ring->commutative ? "yes" : "no")
       << " local=" << (ring->local_ring ? "yes" : "no")
       << " units=" << element_set(*ring, ring->units)
       << " radical=" << element_set(*ring, ring->radical)
       << " wedderburn=" << signature_text(sig) << " |GL2|=" << gl2.str()
       << " |P(R)|=" << points.str() << "\n";
    ctx.emit(j, os.str());
}

void cmd_line_build(const CliContext& ctx, const std::string& spec_text,
                    const std::string& export_path) {
    RingPtr ring = build_ring(spec_text, ctx.build);
    ProjLine line = build_line(ring);
    Int closed = count_points(ring);
    bool nondistant_equiv = nondistant_is_equivalence(line);
    if (closed != Int(line.point_count()))
        throw std::logic_error("closed-form point count disagrees with the built line");

    if (!export_path.empty()) {
        json e;
        e["ring"] = ring->spec;
        json pts = json::array();
        for (auto [a, b] : line.points) pts.push_back({a, b});
        e["points"] = pts;
        e["classes"] = line.classes;
        json dist = json::array();
        for (int p = 0; p < line.point_count(); ++p) {
            json row = json::array();
            for (int q = 0; q < line.point_count(); ++q)
                if (line.distant.get(p, q)) row.push_back(q);
            dist.push_back(row);
        }
        e["distant"] = dist;
        std::ofstream f(export_path);
        if (!f) throw std::runtime_error("cannot write export file '" + export_path + "'");
        f << e.dump(2) << "\n";
    }

    json j;
    j["command"] = "line build";
    j["ring"] = ring->spec;
    j["points"] = line.point_count();
    j["classes"] = line.classes.size();
    j["class_size"] = line.classes.empty() ? 0 : line.classes[0].size();
    j["distant_degree"] = ring->order;
    j["closed_form_points"] = closed.str();
    j["nondistant_is_equivalence"] = nondistant_equiv;
    if (!export_path.empty()) j["export"] = export_path;

    std::ostringstream os;
    os << "points=" << line.point_count() << " classes=" << line.classes.size()
       << " class_size=" << (line.classes.empty() ? 0 : line.classes[0].size())
       << " distant_degree=" << ring->order << " closed_form=" << closed.str()
       << " nondistant_equivalence=" << (nondistant_equiv ? "yes" : "no") << "\n";
    ctx.emit(j, os.str());
}

ChainGeometry build_geometry(const CliContext& ctx, const std::string& ring_spec,
                             const std::string& field_arg) {
    RingPtr ring = build_ring(ring_spec, ctx.build);
    SubfieldEmbedding emb = embed_subfield(ring, field_arg, ctx.build);
    ProjLine line = build_line(ring);
    return build_chain_geometry(line, emb);
}

void cmd_chains_build(const CliContext& ctx, const std::string& ring_spec,
                      const std::string& field_arg, const std::string& export_path) {
    ChainGeometry geo = build_geometry(ctx, ring_spec, field_arg);
    ChainProfile profile = chain_geometry_profile(geo);

    if (!export_path.empty()) {
        Design d = design_from_chain_geometry(geo);
        write_design_file(export_path, d,
                          "# chain-geometry ring=" + geo.ring->spec +
                              " field=" + geo.embedding.field->spec +
                              " strategy=" + geo.embedding.strategy);
    }

    json j;
    j["command"] = "chains build";
    j["ring"] = geo.ring->spec;
    j["field"] = geo.embedding.field->spec;
    j["strategy"] = geo.embedding.strategy;
    j["note"] = geo.embedding.note;
    j["v"] = profile.v;
    j["chains"] = geo.chains.size();
    j["chain_size"] = geo.standard_chain.size();
    j["lambda3"] = geo.lambda3;
    j["normaliser_index"] = geo.normaliser;
    j["gl2_order"] = geo.gl2.str();
    j["chain_stabiliser"] = geo.chain_stabiliser.str();
    json p;
    p["s1"] = profile.s1;
    p["s2"] = profile.s2;
    p["k"] = profile.k;
    p["s1_equals_s2"] = profile.s1_equals_s2;
    p["transversal_triples_covered"] = profile.transversal_triples_covered;
    p["local"] = profile.local_ring;
    j["profile"] = p;
    if (!export_path.empty()) j["export"] = export_path;

    std::ostringstream os;
    os << "v=" << profile.v << " chains=" << geo.chains.size()
       << " chain_size=" << geo.standard_chain.size() << " lambda3=" << geo.lambda3
       << " normaliser_index=" << geo.normaliser << " field=" << geo.embedding.field->spec
       << " strategy=" << geo.embedding.strategy << " s1=" << profile.s1 << " s2=" << profile.s2
       << " local=" << (profile.local_ring ? "yes" : "no") << "\n";
    ctx.emit(j, os.str());
}

void cmd_dd_spera(const CliContext& ctx, const std::string& ring_spec,
                  const std::string& field_arg, int drop, int t,
                  const std::string& export_path) {
    ChainGeometry geo = build_geometry(ctx, ring_spec, field_arg);
    SperaOutcome outcome = spera_from_chain_geometry(geo, t, drop);

    json j;
    j["command"] = "dd spera";
    j["ring"] = geo.ring->spec;
    j["field"] = geo.embedding.field->spec;
    j["strategy"] = geo.embedding.strategy;
    j["drop"] = drop;
    j["t"] = t;
    j["ok"] = outcome.ok;

    if (!outcome.ok) {
        j["rejected_hypothesis"] = outcome.rejected_hypothesis;
        j["message"] = outcome.message;
        j["witness_points"] = outcome.witness_points;
        j["witness_counts"] = outcome.witness_counts;
        if (!outcome.certification.violations.empty())
            j["violations"] = violations_json(outcome.certification.violations);
        if (ctx.json_out) *ctx.out << j.dump(2) << "\n";
        throw CliFailure{1, "rejected (" + outcome.rejected_hypothesis + "): " + outcome.message};
    }

    const DesignParams& p = outcome.certification.params;
    std::vector<long long> lambdas = lambda_row(p);
    if (!export_path.empty())
        write_design_file(export_path, outcome.design,
                          "# chain-geometry ring=" + geo.ring->spec +
                              " field=" + geo.embedding.field->spec + " drop=" +
                              std::to_string(drop));

    j["params"] = params_json(p);
    j["lambdas"] = lambdas;
    if (outcome.stabiliser) j["block_stabiliser"] = outcome.stabiliser->str();
    j["group_order"] = geo.gl2.str();
    if (!export_path.empty()) j["export"] = export_path;

    std::ostringstream os;
    os << params_text(p) << " v=" << p.v << " b=" << p.b << " r=" << p.r
       << " transversal=" << (p.transversal ? "yes" : "no") << "\n";
    os << "lambdas=";
    for (size_t i = 0; i < lambdas.size(); ++i) os << (i ? "," : "") << lambdas[i];
    os << "\n";
    if (outcome.stabiliser)
        os << "group=" << geo.gl2.str() << " block_stabiliser=" << outcome.stabiliser->str()
           << "\n";
    ctx.emit(j, os.str());
}

void cmd_dd_verify(const CliContext& ctx, const std::string& file, int t_flag) {
    Design d = read_design_file(file);
    int t = t_flag > 0 ? t_flag : d.t;
    VerifyResult res = verify_dd(d, t);

    json j;
    j["command"] = "dd verify";
    j["file"] = file;
    j["t"] = t;
    j["ok"] = res.ok;
    if (res.ok) {
        j["params"] = params_json(res.params);
        j["lambdas"] = lambda_row(res.params);
    } else {
        j["violations"] = violations_json(res.violations);
    }

    if (!res.ok) {
        if (ctx.json_out) *ctx.out << j.dump(2) << "\n";
        throw CliFailure{1, violations_text(res.violations)};
    }
    std::ostringstream os;
    os << params_text(res.params) << " OK v=" << res.params.v << " b=" << res.params.b
       << " r=" << res.params.r << " transversal=" << (res.params.transversal ? "yes" : "no")
       << "\n";
    ctx.emit(j, os.str());
}

void cmd_dd_iso(const CliContext& ctx, const std::string& file1, const std::string& file2) {
    Design d1 = read_design_file(file1);
    Design d2 = read_design_file(file2);
    auto map = dd_isomorphic(d1, d2);
    int t1 = max_certified_t(d1);
    int t2 = max_certified_t(d2);

    json j;
    j["command"] = "dd iso";
    j["left"] = file1;
    j["right"] = file2;
    j["isomorphic"] = map.has_value();
    if (map) j["map"] = *map;
    j["max_t_left"] = t1;
    j["max_t_right"] = t2;

    std::ostringstream os;
    os << "isomorphic=" << (map ? "yes" : "no");
    if (map) {
        os << " map=[";
        for (size_t i = 0; i < map->size(); ++i) os << (i ? "," : "") << (*map)[i];
        os << "]";
    }
    os << " max_t_left=" << t1 << " max_t_right=" << t2 << "\n";
    ctx.emit(j, os.str());
}

void cmd_code_export(const CliContext& ctx, const std::string& file, const std::string& out_path) {
    Design d = read_design_file(file);
    ConstantWeightCode code = code_from_design(d);
    if (!verify_constant_weight(code))
        throw std::logic_error("constructed code is not constant-weight");
    if (!out_path.empty()) write_code_file(out_path, code);

    json j;
    j["command"] = "code export";
    j["file"] = file;
    j["n"] = code.n;
    j["m"] = code.m;
    j["k"] = code.k;
    j["words"] = code.words.size();
    if (!out_path.empty()) j["out"] = out_path;
    else j["code"] = code.words;

    std::ostringstream os;
    os << "n=" << code.n << " m=" << code.m << " k=" << code.k << " words=" << code.words.size();
    if (!out_path.empty()) os << " written=" << out_path;
    os << "\n";
    if (out_path.empty() && !ctx.json_out) {
        for (const auto& w : code.words) {
            for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
            os << "\n";
        }
    }
    ctx.emit(j, os.str());
}

void cmd_count_points(const CliContext& ctx, const std::string& spec_text) {
    RingPtr ring = build_ring(spec_text, ctx.build);
    Int closed = count_points(ring);
    ProjLine line = build_line(ring);
    bool match = (closed == Int(line.point_count()));

    json j;
    j["command"] = "count points";
    j["ring"] = ring->spec;
    j["closed"] = closed.str();
    j["enumerated"] = line.point_count();
    j["match"] = match;

    if (!match) {
        if (ctx.json_out) *ctx.out << j.dump(2) << "\n";
        throw CliFailure{1, "closed-form count " + closed.str() + " != enumerated " +
                                std::to_string(line.point_count())};
    }
    std::ostringstream os;
    os << "closed=" << closed.str() << " enumerated=" << line.point_count() << " match=yes\n";
    ctx.emit(j, os.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliContext ctx;
    ctx.out = &out;
    ctx.err = &err;

    if (const char* cap = std::getenv("RINGLINE_CAP")) {
        char* end = nullptr;
        long long value = std::strtoll(cap, &end, 10);
        if (end == cap || *end != '\0' || value <= 0) {
            err << "invalid RINGLINE_CAP value '" << cap << "'\n";
            return 2;
        }
        ctx.build.order_cap = value;
    }

    CLI::App app{"projective lines over finite rings, chain geometries, and divisible designs"};
    app.name("ringline");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", ctx.json_out, "emit a machine-readable report");

    std::string spec_text, ring_spec, field_arg, export_path, out_path;
    std::string file1, file2;
    int drop = 0, t = 3, t_flag = 0;

    CLI::App* ring_cmd = app.add_subcommand("ring", "ring structure reports");
    ring_cmd->require_subcommand(1);
    ring_cmd->fallthrough();
    CLI::App* ring_info = ring_cmd->add_subcommand("info", "order, units, radical, signature");
    ring_info->fallthrough();
    ring_info->add_option("spec", spec_text, "ring spec, e.g. Z/6 or dual(GF(4),h=2,frob=1)")
        ->required();
    ring_info->callback([&] { cmd_ring_info(ctx, spec_text); });

    CLI::App* line_cmd = app.add_subcommand("line", "projective line construction");
    line_cmd->require_subcommand(1);
    line_cmd->fallthrough();
    CLI::App* line_build = line_cmd->add_subcommand("build", "build P(R) and report its shape");
    line_build->fallthrough();
    line_build->add_option("spec", spec_text, "ring spec")->required();
    line_build->add_option("--export", export_path, "write the line as JSON");
    line_build->callback([&] { cmd_line_build(ctx, spec_text, export_path); });

    CLI::App* chains_cmd = app.add_subcommand("chains", "chain geometry construction");
    chains_cmd->require_subcommand(1);
    chains_cmd->fallthrough();
    CLI::App* chains_build = chains_cmd->add_subcommand("build", "build Sigma(K,R)");
    chains_build->fallthrough();
    chains_build->add_option("--ring", ring_spec, "ring spec")->required();
    chains_build
        ->add_option("--field", field_arg,
                     "prime | constants | wedderburn | field spec | witness file")
        ->required();
    chains_build->add_option("--export", export_path, "write chains as a design file");
    chains_build->callback([&] { cmd_chains_build(ctx, ring_spec, field_arg, export_path); });

    CLI::App* dd_cmd = app.add_subcommand("dd", "divisible designs");
    dd_cmd->require_subcommand(1);
    dd_cmd->fallthrough();
    CLI::App* dd_spera = dd_cmd->add_subcommand("spera", "orbit construction over a chain geometry");
    dd_spera->fallthrough();
    dd_spera->add_option("--ring", ring_spec, "ring spec")->required();
    dd_spera
        ->add_option("--field", field_arg,
                     "prime | constants | wedderburn | field spec | witness file")
        ->required();
    dd_spera->add_option("--drop", drop, "standard points removed from the base chain (0-3)")
        ->check(CLI::Range(0, 3));
    dd_spera->add_option("--t", t, "transversality level")->required();
    dd_spera->add_option("--export", export_path, "write the design file");
    dd_spera->callback([&] { cmd_dd_spera(ctx, ring_spec, field_arg, drop, t, export_path); });

    CLI::App* dd_verify = dd_cmd->add_subcommand("verify", "certify a design file");
    dd_verify->fallthrough();
    dd_verify->add_option("file", file1, "design file")->required();
    dd_verify->add_option("--t", t_flag, "level to certify at (default: the file header)");
    dd_verify->callback([&] { cmd_dd_verify(ctx, file1, t_flag); });

    CLI::App* dd_iso = dd_cmd->add_subcommand("iso", "isomorphism search between design files");
    dd_iso->fallthrough();
    dd_iso->add_option("file1", file1, "first design file")->required();
    dd_iso->add_option("file2", file2, "second design file")->required();
    dd_iso->callback([&] { cmd_dd_iso(ctx, file1, file2); });

    CLI::App* code_cmd = app.add_subcommand("code", "constant-weight codes");
    code_cmd->require_subcommand(1);
    code_cmd->fallthrough();
    CLI::App* code_export = code_cmd->add_subcommand("export", "code of a design file");
    code_export->fallthrough();
    code_export->add_option("file", file1, "design file")->required();
    code_export->add_option("--out", out_path, "output code file");
    code_export->callback([&] { cmd_code_export(ctx, file1, out_path); });

    CLI::App* count_cmd = app.add_subcommand("count", "closed-form counting");
    count_cmd->require_subcommand(1);
    count_cmd->fallthrough();
    CLI::App* count_points_cmd = count_cmd->add_subcommand("points", "|P(R)| closed form vs built");
    count_points_cmd->fallthrough();
    count_points_cmd->add_option("spec", spec_text, "ring spec")->required();
    count_points_cmd->callback([&] { cmd_count_points(ctx, spec_text); });

    std::vector<const char*> argv;
    argv.push_back("ringline");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CliFailure& f) {
        err << f.message;
        if (!f.message.empty() && f.message.back() != '\n') err << "\n";
        return f.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace ringline
