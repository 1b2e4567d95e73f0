#include "tqftcli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tqft/coloring.hpp"
#include "tqft/density.hpp"
#include "tqft/irreducibility.hpp"
#include "tqft/mcg_action.hpp"
#include "tqft/recoupling.hpp"
#include "tqft/serialize.hpp"
#include "tqft/tl_oracle.hpp"

namespace tqft::cli {

using nlohmann::json;

namespace {

RingSpec ring_of(const RunConfig& c) { return c.p ? RingSpec::root_of_unity(*c.p) : RingSpec::generic(); }

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (size_t k = 0; k < v.size(); ++k) s += (k ? std::string(1, sep) : "") + std::to_string(v[k]);
  return s;
}

void need_colors(const RunConfig& c, size_t n) {
  if (c.colors.size() != n)
    throw std::invalid_argument(c.verb + " needs exactly " + std::to_string(n) + " colors, got " +
                                std::to_string(c.colors.size()));
}

json header(const RunConfig& c) {
  json j{{"schema", kResultSchema}, {"verb", c.verb}, {"ring", to_json(ring_of(c))}};
  return j;
}

std::string default_name(const RunConfig& c) {
  std::string name = c.verb;
  for (auto& ch : name)
    if (ch == ' ') ch = '-';
  name += c.p ? "_p" + std::to_string(*c.p) : "_generic";
  if (c.verb == "dim" || c.verb == "colorings" || c.verb == "certify irr" || c.verb == "twist")
    name += "_g" + std::to_string(c.g) + "_b" + std::to_string(c.b);
  if (c.verb == "certify dense") name += "_n" + std::to_string(c.n);
  if (c.verb == "qint") name += "_i" + std::to_string(c.i);
  if (!c.colors.empty()) name += "_c" + join(c.colors, '-');
  if (c.verb == "sweep") name += "_" + c.sweep_kind + "_k" + std::to_string(c.color_max);
  return name + (c.format == Format::Csv ? ".csv" : c.format == Format::Json ? ".json" : ".txt");
}

/// An emitted artifact plus the exit code it implies.
struct Artifact {
  json doc;
  std::string text;
  std::string csv;
  int code = kSuccess;
};

int status_code(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return kSuccess;
    case CertStatus::Failed: return kFailed;
    case CertStatus::Vacuous:
    case CertStatus::NotApplicable: return kVacuous;
  }
  return kFailed;
}

Artifact scalar_artifact(const RunConfig& c, const std::string& key, const Fraction& value) {
  Artifact a;
  a.doc = header(c);
  a.doc["parameters"] = json{{"colors", c.colors}};
  if (c.verb == "qint") a.doc["parameters"] = json{{"i", c.i}};
  a.doc["value"] = to_json(value);
  a.doc["text"] = value.to_string();
  a.text = value.to_string() + "\n";
  a.csv = key + ",value\n" + (c.verb == "qint" ? std::to_string(c.i) : join(c.colors, ';')) + ",\"" +
          value.to_string() + "\"\n";
  return a;
}

Artifact matrix_artifact(const RunConfig& c, const RingMatrix& m) {
  Artifact a;
  a.doc = header(c);
  a.doc["parameters"] = json{{"colors", c.colors}};
  a.doc["matrix"] = to_json(m);
  std::ostringstream text, csv;
  csv << "row";
  for (const auto& l : m.col_labels) csv << "," << l;
  csv << "\n";
  for (size_t r = 0; r < m.rows(); ++r) {
    text << (r < m.row_labels.size() ? m.row_labels[r] : std::to_string(r)) << ":";
    csv << (r < m.row_labels.size() ? m.row_labels[r] : std::to_string(r));
    for (size_t k = 0; k < m.cols(); ++k) {
      text << "  " << m(r, k).to_string();
      csv << ",\"" << m(r, k).to_string() << "\"";
    }
    text << "\n";
    csv << "\n";
  }
  a.text = text.str();
  a.csv = csv.str();
  return a;
}

void certificate_text(const Certificate& c, int depth, std::ostringstream& os) {
  os << std::string(static_cast<size_t>(2 * depth), ' ') << c.claim << " " << c.instance.value("colors", json::array()).dump()
     << " g=" << c.instance.value("g", 0) << " b=" << c.instance.value("b", 0) << ": " << to_string(c.status);
  if (!c.substatus.empty()) os << " (" << c.substatus << ")";
  os << "\n";
  for (const auto& k : c.checks)
    if (k.status != CheckStatus::Passed)
      os << std::string(static_cast<size_t>(2 * depth + 2), ' ') << "check " << k.name << ": " << to_string(k.status)
         << "\n";
  for (const auto& a : c.assumptions) os << std::string(static_cast<size_t>(2 * depth + 2), ' ') << "assumes: " << a << "\n";
  for (const auto& ch : c.children) certificate_text(ch, depth + 1, os);
}

Artifact certificate_artifact(const Certificate& cert) {
  Artifact a;
  a.doc = to_json(cert);
  std::ostringstream os;
  certificate_text(cert, 0, os);
  a.text = os.str();
  a.csv = "claim,status,substatus\n" + cert.claim + "," + to_string(cert.status) + "," + cert.substatus + "\n";
  a.code = status_code(cert.status);
  return a;
}

UniTrivalentGraph graph_for(const RunConfig& c) {
  if (c.graph.empty()) return standard_graph(c.g, c.b);
  std::ifstream in(c.graph);
  if (!in) throw std::invalid_argument("cannot read graph file " + c.graph);
  return graph_from_json(json::parse(in));
}

json read_json_input(const RunConfig& c) {
  if (!c.expr.empty()) return json::parse(c.expr);
  if (c.input.empty()) throw std::invalid_argument(c.verb + " needs --input FILE or --expr JSON");
  std::ifstream in(c.input);
  if (!in) throw std::invalid_argument("cannot read input file " + c.input);
  return json::parse(in);
}

int edge_index(const UniTrivalentGraph& g, const std::string& edge) {
  const int by_label = g.find_edge(edge);
  if (by_label >= 0) return by_label;
  try {
    size_t used = 0;
    const int k = std::stoi(edge, &used);
    if (used == edge.size()) return k;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("unknown edge: " + edge);
}

// ---------------------------------------------------------------------------

Artifact do_qint(const RunConfig& c) { return scalar_artifact(c, "i", Fraction(quantum_integer(c.i, ring_of(c)))); }

Artifact do_theta(const RunConfig& c) {
  need_colors(c, 3);
  return scalar_artifact(c, "colors", theta(c.colors[0], c.colors[1], c.colors[2], ring_of(c)));
}

Artifact do_tet(const RunConfig& c, bool six) {
  need_colors(c, 6);
  const auto& k = c.colors;
  const RingSpec r = ring_of(c);
  return scalar_artifact(c, "colors", six ? sixj(k[0], k[1], k[2], k[3], k[4], k[5], r) : tet(k[0], k[1], k[2], k[3], k[4], k[5], r));
}

Artifact do_fmatrix(const RunConfig& c) {
  need_colors(c, 4);
  return matrix_artifact(c, fusion_matrix(c.colors[0], c.colors[1], c.colors[2], c.colors[3], ring_of(c)));
}

Artifact do_dim(const RunConfig& c) {
  Artifact a;
  long long d = 0;
  if (c.graph.empty()) {
    d = dimension(c.g, c.b, c.colors, ring_of(c));
  } else {
    d = static_cast<long long>(enumerate_colorings(graph_for(c), c.colors, ring_of(c)).size());
  }
  a.doc = header(c);
  a.doc["parameters"] = json{{"g", c.g}, {"b", c.b}, {"colors", c.colors}};
  a.doc["dim"] = d;
  a.text = std::to_string(d) + "\n";
  a.csv = "g,b,colors,dim\n" + std::to_string(c.g) + "," + std::to_string(c.b) + "," + join(c.colors, ';') + "," +
          std::to_string(d) + "\n";
  return a;
}

Artifact do_colorings(const RunConfig& c) {
  const UniTrivalentGraph g = graph_for(c);
  const auto all = enumerate_colorings(g, c.colors, ring_of(c));
  Artifact a;
  a.doc = header(c);
  a.doc["parameters"] = json{{"g", c.g}, {"b", c.b}, {"colors", c.colors}};
  a.doc["graph"] = to_json(g);
  a.doc["colorings"] = all;
  std::string labels;
  for (size_t k = 0; k < g.edges().size(); ++k) labels += (k ? "," : "") + g.edges()[k].label;
  a.csv = labels + "\n";
  for (const auto& col : all) {
    a.text += join(col, ' ') + "\n";
    a.csv += join(col, ',') + "\n";
  }
  return a;
}

Artifact do_twist(const RunConfig& c) {
  const RingSpec r = ring_of(c);
  if (c.color) {
    const Scalar mu = c.inverse ? twist_eigenvalue(*c.color, r).inverse() : twist_eigenvalue(*c.color, r);
    Artifact a = scalar_artifact(c, "color", Fraction(mu));
    a.doc["parameters"] = json{{"color", *c.color}, {"inverse", c.inverse}};
    return a;
  }
  RingMatrix m;
  if (c.dual) {
    need_colors(c, 4);
    m = dual_twist_matrix(c.colors[0], c.colors[1], c.colors[2], c.colors[3], r, c.inverse);
  } else if (!c.pair.empty()) {
    if (c.pair.size() != 2) throw std::invalid_argument("--pair needs two punctures i,j");
    m = pure_braid_twist(c.b, c.pair[0], c.pair[1], c.colors, r, c.inverse);
  } else {
    if (c.edge.empty()) throw std::invalid_argument("twist needs --edge, --pair, --dual or --color");
    const UniTrivalentGraph g = graph_for(c);
    m = edge_twist_matrix(g, edge_index(g, c.edge), c.colors, r, c.inverse);
  }
  Artifact a = matrix_artifact(c, m);
  a.doc["parameters"] =
      json{{"g", c.g}, {"b", c.b}, {"colors", c.colors}, {"edge", c.edge}, {"pair", c.pair}, {"dual", c.dual}, {"inverse", c.inverse}};
  return a;
}

Artifact do_oracle(const RunConfig& c) {
  const json in = read_json_input(c);
  const RingSpec r = ring_of(c);
  Fraction value;
  if (in.contains("network")) {
    value = evaluate_network(colored_network_from_json(in.at("network")), r, c.bounds.max_strands);
  } else if (in.contains("diagram")) {
    const PlanarDiagram d = planar_diagram_from_json(in.at("diagram"));
    int strands = 0, peak = d.boundary;
    for (const auto& op : d.ops) {
      strands += op.kind == DiagramOp::Kind::Cup ? 2 : op.kind == DiagramOp::Kind::Cap ? -2 : 0;
      peak = std::max(peak, d.boundary + strands);
    }
    if (peak > c.bounds.max_strands)
      throw std::invalid_argument("diagram width " + std::to_string(peak) + " exceeds max_strands bound " +
                                  std::to_string(c.bounds.max_strands));
    value = resolve_bracket(d, r);
  } else {
    throw std::invalid_argument("oracle input needs a \"network\" or \"diagram\" entry");
  }
  Artifact a = scalar_artifact(c, "input", value);
  a.doc["parameters"] = json{{"input", in}};
  a.csv = "value\n\"" + value.to_string() + "\"\n";
  return a;
}

Artifact do_certify_irr(const RunConfig& c) {
  if (!c.p) {
    if (c.g != 0) throw std::invalid_argument("certify irr in generic mode supports genus 0 only");
    if (static_cast<int>(c.colors.size()) != c.b) throw std::invalid_argument("boundary color count does not match --b");
    if (c.b == 4) return certificate_artifact(certify_v04(RingSpec::generic(), c.colors[0], c.colors[1], c.colors[2], c.colors[3]));
    return certificate_artifact(certify_irreducible_generic(c.colors, c.bounds.max_color));
  }
  return certificate_artifact(
      certify_irreducible(*c.p, c.g, c.b, c.colors, InductionBounds{c.bounds.max_color, c.bounds.max_depth}));
}

Artifact do_certify_dense(const RunConfig& c) { return certificate_artifact(certify_dense(c.n, c.colors, c.bounds.max_color)); }

Artifact do_replay(const RunConfig& c) {
  const Certificate cert = certificate_from_json(read_json_input(c));
  const ReplayReport r = replay(cert);
  Artifact a;
  a.doc = json{{"schema", kResultSchema},
               {"verb", c.verb},
               {"claim", cert.claim},
               {"stored_status", to_string(cert.status)},
               {"status", to_string(r.status)},
               {"consistent", r.consistent},
               {"mismatches", r.mismatches}};
  a.text = to_string(r.status) + (r.consistent ? "" : " (inconsistent with stored certificate)") + "\n";
  for (const auto& m : r.mismatches) a.text += "  " + m + "\n";
  a.csv = "claim,stored,replayed,consistent\n" + cert.claim + "," + to_string(cert.status) + "," + to_string(r.status) +
          "," + (r.consistent ? "true" : "false") + "\n";
  a.code = r.consistent ? status_code(r.status) : kFailed;
  return a;
}

Artifact do_sweep(const RunConfig& c) {
  const std::string& kind = c.sweep_kind;
  if (kind != "dim" && kind != "irr" && kind != "dense") throw std::invalid_argument("unknown sweep kind: " + kind);
  if (c.color_max < 0 || c.color_max > c.bounds.max_color)
    throw std::invalid_argument("--color-max " + std::to_string(c.color_max) + " exceeds max_color bound " +
                                std::to_string(c.bounds.max_color));
  const int holes = kind == "dense" ? c.n : c.b;
  if (holes < 0 || holes > 8) throw std::invalid_argument("sweep supports at most 8 boundary components");
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(static_cast<size_t>(holes), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == holes) {
      if (!c.sorted_only || std::is_sorted(cur.begin(), cur.end())) tuples.push_back(cur);
      return;
    }
    for (int v = 0; v <= c.color_max; ++v) {
      cur[static_cast<size_t>(k)] = v;
      rec(k + 1);
    }
  };
  rec(0);
  struct Row {
    long long dim = 0;
    std::string status;
    std::string error;
  };
  std::vector<Row> rows(tuples.size());
  const RingSpec ring = ring_of(c);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < tuples.size(); k = next++) {
      const auto& col = tuples[k];
      Row& row = rows[k];
      try {
        row.dim = dimension(kind == "dense" ? 0 : c.g, holes, col, ring);
        if (kind == "irr") {
          RunConfig sub = c;
          sub.colors = col;
          row.status = to_string(certificate_from_json(do_certify_irr(sub).doc).status);
        } else if (kind == "dense") {
          row.status = to_string(certify_dense(c.n, col, c.bounds.max_color).status);
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  unsigned nthreads = c.threads > 0 ? static_cast<unsigned>(c.threads) : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(std::max<size_t>(1, tuples.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  Artifact a;
  a.doc = header(c);
  a.doc["parameters"] = json{{"kind", kind}, {"g", c.g}, {"b", holes}, {"color_max", c.color_max}, {"sorted_only", c.sorted_only}};
  json results = json::array();
  std::map<std::string, int> counts;
  a.csv = "colors,dim,status\n";
  for (size_t k = 0; k < tuples.size(); ++k) {
    json r{{"colors", tuples[k]}, {"dim", rows[k].dim}};
    std::string status = rows[k].error.empty() ? rows[k].status : "ERROR";
    if (!status.empty()) r["status"] = status;
    if (!rows[k].error.empty()) r["error"] = rows[k].error;
    if (!status.empty()) ++counts[status];
    if (status == "FAILED" || status == "ERROR") a.code = kFailed;
    results.push_back(std::move(r));
    a.csv += join(tuples[k], ';') + "," + std::to_string(rows[k].dim) + "," + status + "\n";
    a.text += join(tuples[k], ',') + "  dim=" + std::to_string(rows[k].dim) + (status.empty() ? "" : "  " + status) + "\n";
  }
  a.doc["results"] = std::move(results);
  a.doc["summary"] = counts;
  for (const auto& [s, n] : counts) a.text += s + ": " + std::to_string(n) + "\n";
  return a;
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.bounds.max_color <= 0 || c.bounds.max_strands <= 0 || c.bounds.max_depth <= 0)
    throw std::invalid_argument("bounds must be positive");
  if (c.verb == "certify dense" && c.p) throw std::invalid_argument("certify dense requires generic mode");
  for (int col : c.colors)
    if (col > c.bounds.max_color)
      throw std::invalid_argument("color " + std::to_string(col) + " exceeds max_color bound " +
                                  std::to_string(c.bounds.max_color));
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  Artifact a;
  try {
    validate(c);
    if (c.verb == "qint") a = do_qint(c);
    else if (c.verb == "theta") a = do_theta(c);
    else if (c.verb == "tet") a = do_tet(c, false);
    else if (c.verb == "sixj") a = do_tet(c, true);
    else if (c.verb == "fmatrix") a = do_fmatrix(c);
    else if (c.verb == "dim") a = do_dim(c);
    else if (c.verb == "colorings") a = do_colorings(c);
    else if (c.verb == "twist") a = do_twist(c);
    else if (c.verb == "oracle-eval") a = do_oracle(c);
    else if (c.verb == "certify irr") a = do_certify_irr(c);
    else if (c.verb == "certify dense") a = do_certify_dense(c);
    else if (c.verb == "sweep") a = do_sweep(c);
    else if (c.verb == "replay") a = do_replay(c);
    else throw std::invalid_argument("unknown verb: " + c.verb);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const std::string body = c.format == Format::Json ? a.doc.dump(2) + "\n" : c.format == Format::Csv ? a.csv : a.text;
  std::string path = c.output;
  const char* dir = std::getenv("TQFTCERT_OUTPUT_DIR");
  if (dir && *dir && path.empty()) path = (std::filesystem::path(dir) / default_name(c)).string();
  else if (dir && *dir && !path.empty() && std::filesystem::path(path).is_relative())
    path = (std::filesystem::path(dir) / path).string();
  if (path.empty() || path == "-") {
    out << body;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << path << "\n";
      return kUsage;
    }
    f << body;
    out << path << "\n";
  }
  return a.code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quantum SO(3) TQFT computations and irreducibility/density certificates", "tqftcert"};
  app.require_subcommand(1);
  RunConfig c;
  int p = 0;
  bool generic = false, as_json = false;
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", p, "Level: odd prime p >= 5 (A a primitive 4p-th root of unity)");
    sub->add_flag("--generic", generic, "Transcendental A (default when --p is absent)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--json", as_json, "Shorthand for --format json");
    sub->add_option("--output,-o", c.output, "Write the artifact to this path");
    sub->add_option("--max-color", c.bounds.max_color, "Largest color accepted");
    sub->add_option("--max-strands", c.bounds.max_strands, "Oracle strand bound");
    sub->add_option("--max-depth", c.bounds.max_depth, "Induction depth bound");
  };
  auto colors_opt = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--colors", c.colors, "Comma-separated colors")->delimiter(',');
    if (required) o->required();
  };
  auto space_opts = [&](CLI::App* sub) {
    sub->add_option("--g", c.g, "Genus");
    sub->add_option("--b", c.b, "Number of boundary components");
  };

  auto* qint = app.add_subcommand("qint", "Quantum integer [i]");
  common(qint);
  qint->add_option("--i", c.i, "Index")->required();
  auto* th = app.add_subcommand("theta", "Theta net <a,b,c>");
  common(th);
  colors_opt(th, true);
  auto* te = app.add_subcommand("tet", "Tetrahedron symbol (a,b,i,c,d,j)");
  common(te);
  colors_opt(te, true);
  auto* sj = app.add_subcommand("sixj", "Change-of-basis coefficient (a,b,i,c,d,j)");
  common(sj);
  colors_opt(sj, true);
  auto* fm = app.add_subcommand("fmatrix", "Fusion matrix F(a,b,c,d)");
  common(fm);
  colors_opt(fm, true);
  auto* di = app.add_subcommand("dim", "Dimension of V_{g,b;colors}");
  common(di);
  space_opts(di);
  colors_opt(di, false);
  di->add_option("--graph", c.graph, "Graph JSON file (count colorings of this graph)");
  auto* co = app.add_subcommand("colorings", "Admissible colorings of a graph");
  common(co);
  space_opts(co);
  colors_opt(co, false);
  co->add_option("--graph", c.graph, "Graph JSON file");
  auto* tw = app.add_subcommand("twist", "Dehn twist matrices and eigenvalues");
  common(tw);
  space_opts(tw);
  colors_opt(tw, false);
  tw->add_option("--graph", c.graph, "Graph JSON file");
  tw->add_option("--edge", c.edge, "Edge label or index of the twisted edge");
  tw->add_option("--pair", c.pair, "Punctures i,j enclosed by the curve")->delimiter(',');
  tw->add_option("--color", c.color, "Twist eigenvalue of one color");
  tw->add_flag("--dual", c.dual, "Twist about legs 2,3 on the four-holed sphere");
  tw->add_flag("--inverse", c.inverse, "Inverse twist");
  auto* oe = app.add_subcommand("oracle-eval", "Evaluate a planar diagram or network by state sum");
  common(oe);
  oe->add_option("--input", c.input, "JSON file with a \"diagram\" or \"network\" entry");
  oe->add_option("--expr", c.expr, "Inline JSON instead of --input");
  auto* ce = app.add_subcommand("certify", "Certificates");
  ce->require_subcommand(1);
  auto* irr = ce->add_subcommand("irr", "Irreducibility of V_{g,b;colors}");
  common(irr);
  space_opts(irr);
  colors_opt(irr, false);
  auto* dense = ce->add_subcommand("dense", "Zariski density for V_{0,n;colors}");
  common(dense);
  dense->add_option("--n", c.n, "Number of punctures")->required();
  colors_opt(dense, true);
  auto* sw = app.add_subcommand("sweep", "Batch over all color tuples");
  common(sw);
  space_opts(sw);
  sw->add_option("--n", c.n, "Punctures (kind dense)");
  sw->add_option("--kind", c.sweep_kind, "dim, irr or dense")->check(CLI::IsMember({"dim", "irr", "dense"}));
  sw->add_option("--color-max", c.color_max, "Largest color in the sweep");
  sw->add_flag("--sorted-only", c.sorted_only, "Only nondecreasing tuples");
  sw->add_option("--threads", c.threads, "Worker threads (0: hardware)");
  auto* rp = app.add_subcommand("replay", "Re-verify a stored certificate from its witnesses");
  common(rp);
  rp->add_option("--input", c.input, "Certificate JSON file");
  rp->add_option("--expr", c.expr, "Inline certificate JSON");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (!e.get_name().empty() && e.get_name() != "RequiredError") err << "run with --help for usage\n";
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub == ce) {
      for (auto* s2 : ce->get_subcommands()) {
        c.verb = "certify " + s2->get_name();
        if (s2->count("--help")) {
          out << s2->help();
          return kSuccess;
        }
      }
    } else {
      c.verb = sub->get_name();
    }
  }
  if (p != 0 && generic) {
    err << "usage error: --p and --generic are exclusive\n";
    return kUsage;
  }
  if (p != 0) c.p = p;
  c.format = as_json || format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  return run(c, out, err);
}

}  // namespace tqft::cli
