#include "mft/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mft/errors.hpp"
#include "mft/float_backend.hpp"
#include "mft/forest.hpp"
#include "mft/io.hpp"
#include "mft/oracle.hpp"
#include "mft/verify.hpp"

namespace mft::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string mode = "exact";
  std::string lambda = "1";
  std::string output = "json";
  bool signed_variant = false;
  std::optional<int> max_enum;
  std::optional<int> from;
  std::optional<int> to;
  std::string roots;
  std::string kind;  // empty: forests matching the graph kind
};

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(format_double(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Scalar>
Json coeffs_json(const Polynomial<Scalar>& p) {
  Json out = Json::array();
  for (const Scalar& c : p.coeffs) {
    if constexpr (std::is_same_v<Scalar, double>) {
      out.push_back(format_double(c));
    } else {
      out.push_back(c.str());
    }
  }
  return out;
}

Json index_list(std::span<const std::size_t> instances) {
  Json out = Json::array();
  for (std::size_t k : instances) out.push_back(k + 1);
  return out;
}

Json vertex_list(const VertexSet& s) {
  Json out = Json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

std::string join(const Json& array, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < array.size(); ++k) {
    if (k > 0) out += sep;
    out += array[k].is_string() ? array[k].get<std::string>() : array[k].dump();
  }
  return out;
}

// Renders the command payload as tab-separated text.
std::string to_tsv(const Json& doc) {
  std::ostringstream out;
  if (doc.contains("matrix")) {
    for (const auto& row : doc["matrix"]) out << join(row, "\t") << '\n';
  }
  for (const char* key : {"detW", "cofactor"}) {
    if (doc.contains(key)) out << doc[key].get<std::string>() << '\n';
  }
  if (doc.contains("coeffs")) out << join(doc["coeffs"], "\t") << '\n';
  if (doc.contains("forests")) {
    out << "instances\troots\tweight\n";
    for (const auto& f : doc["forests"]) {
      out << join(f["instances"], ",") << '\t' << (f.contains("roots") ? join(f["roots"], ",") : "")
          << '\t' << f["weight"].get<std::string>() << '\n';
    }
    out << "total\t\t" << doc["total"].get<std::string>() << '\n';
  }
  if (doc.contains("report")) {
    for (const auto& c : doc["report"]) {
      out << c["check"].get<std::string>() << '\t' << c["status"].get<std::string>() << '\t'
          << c["detail"].get<std::string>() << '\n';
    }
  }
  return out.str();
}

int vertex_arg(const std::optional<int>& v, int n, const char* flag) {
  if (!v) throw ValidationError(std::string("missing ") + flag);
  if (*v < 1 || *v > n) throw ValidationError(std::string(flag) + " out of range 1.." + std::to_string(n));
  return *v - 1;
}

VertexSet parse_roots(const std::string& text, int n) {
  std::vector<int> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) throw ParseError(0, "invalid --roots entry '" + item + "'");
    if (v < 1 || v > n) throw ValidationError("--roots entry out of range 1.." + std::to_string(n));
    members.push_back(v - 1);
  }
  return VertexSet(std::move(members));
}

oracle::EnumGuard guard_from(const Options& o) {
  oracle::EnumGuard guard;
  if (o.max_enum) {
    guard.max_instances = *o.max_enum;
    guard.max_vertices = std::max(guard.max_vertices, *o.max_enum);
  }
  return guard;
}

Rational lambda_of(const Options& o) {
  try {
    return Rational::parse(o.lambda);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("--lambda: ") + e.what());
  }
}

bool float_mode(const Options& o) { return o.mode == "float"; }

void require_exact(const Options& o, const std::string& command) {
  if (float_mode(o)) throw ValidationError(command + " is only available in exact mode");
}

Json enumerate(const AnyGraph& g, const Options& o) {
  require_exact(o, "enumerate");
  const oracle::EnumGuard guard = guard_from(o);
  const int n = order(g);
  const std::optional<VertexSet> roots = o.roots.empty() ? std::nullopt : std::optional(parse_roots(o.roots, n));
  const bool pair = o.from || o.to;
  const int i = pair ? vertex_arg(o.from, n, "--from") : 0;
  const int j = pair ? vertex_arg(o.to, n, "--to") : 0;

  Json forests = Json::array();
  Rational total;
  auto emit = [&](std::span<const std::size_t> instances, const Rational& w, const VertexSet* r) {
    Json item;
    item["instances"] = index_list(instances);
    if (r) item["roots"] = vertex_list(*r);
    item["weight"] = w.str();
    forests.push_back(std::move(item));
    total += w;
  };

  const std::string kind = !o.kind.empty()                    ? o.kind
                           : std::holds_alternative<Multigraph>(g) ? "rooted-forests"
                                                                   : "diverging-forests";
  if (kind == "rooted-forests") {
    const auto* u = std::get_if<Multigraph>(&g);
    if (!u) throw ValidationError("rooted-forests needs an undirected graph");
    auto family = oracle::enum_rooted_forests(*u, guard);
    if (pair) family = oracle::filter_rooted(family, i, j);
    if (roots) family = oracle::filter_roots(family, *roots);
    for (const auto& f : family.members) {
      const VertexSet r = f.roots();
      emit(f.instances, oracle::weight_of(f.instances, family.host), &r);
    }
  } else if (kind == "diverging-forests") {
    const auto* d = std::get_if<Multidigraph>(&g);
    if (!d) throw ValidationError("diverging-forests needs a directed graph");
    auto family = oracle::enum_diverging_forests(*d, guard);
    if (pair) family = oracle::filter_diverging(family, i, j);
    if (roots) family = oracle::filter_roots(family, *roots);
    for (const auto& f : family.members) {
      const VertexSet r = oracle::roots(f, family.host);
      emit(f.instances, oracle::weight_of(f.instances, family.host), &r);
    }
  } else if (kind == "trees") {
    if (o.to || roots) throw ValidationError("trees accepts only --from (directed root)");
    if (const auto* u = std::get_if<Multigraph>(&g)) {
      if (o.from) throw ValidationError("--from applies to directed trees only");
      const auto family = oracle::enum_spanning_trees(*u, guard);
      for (const auto& t : family.members) emit(t.instances, oracle::weight_of(t.instances, family.host), nullptr);
    } else {
      const auto& d = std::get<Multidigraph>(g);
      const auto all = oracle::enum_diverging_forests(d, guard);
      for (int root = 0; root < n; ++root) {
        if (o.from && root != vertex_arg(o.from, n, "--from")) continue;
        const auto family = oracle::filter_roots(all, VertexSet{root});
        const VertexSet r{root};
        for (const auto& f : family.members) emit(f.instances, oracle::weight_of(f.instances, d), &r);
      }
    }
  } else {
    throw ValidationError("unknown --kind '" + kind + "'");
  }

  Json doc;
  doc["kind"] = kind;
  doc["count"] = forests.size();
  doc["forests"] = std::move(forests);
  doc["total"] = total.str();
  return doc;
}

Json execute(const std::string& command, const Options& o, bool& verify_failed) {
  const AnyGraph g = io::load_graph(o.file);
  const int n = order(g);
  const Rational lambda = lambda_of(o);

  Json doc;
  doc["command"] = command;
  doc["n"] = n;
  doc["mode"] = o.mode;

  if (command == "laplacian") {
    const RationalMatrix l = laplacian_of(g);
    doc["matrix"] = float_mode(o) ? matrix_json(to_double(l)) : matrix_json(l);
  } else if (command == "forest-matrix") {
    doc["lambda"] = lambda.str();
    if (float_mode(o)) {
      doc["matrix"] = matrix_json(Eigen::MatrixXd(fp::sparse_forest_matrix(g, lambda.to_double())));
    } else {
      doc["matrix"] = matrix_json(forest_matrix(laplacian_of(g), lambda));
    }
  } else if (command == "det") {
    doc["lambda"] = lambda.str();
    doc["detW"] = float_mode(o) ? format_double(fp::forest_det(g, lambda.to_double()))
                                : det(forest_matrix(laplacian_of(g), lambda)).str();
  } else if (command == "cofactor") {
    doc["lambda"] = lambda.str();
    if (o.from || o.to) {
      const int i = vertex_arg(o.from, n, "--from");
      const int j = vertex_arg(o.to, n, "--to");
      doc["from"] = i + 1;
      doc["to"] = j + 1;
      if (float_mode(o)) {
        const Eigen::MatrixXd w(fp::sparse_forest_matrix(g, lambda.to_double()));
        doc["cofactor"] = format_double(cofactor(w, i, j));
      } else {
        doc["cofactor"] = cofactor(forest_matrix(laplacian_of(g), lambda), i, j).str();
      }
    } else if (float_mode(o)) {
      doc["matrix"] = matrix_json(Eigen::MatrixXd(adjugate(Eigen::MatrixXd(fp::sparse_forest_matrix(g, lambda.to_double()))).transpose()));
    } else {
      doc["matrix"] = matrix_json(RationalMatrix(adjugate(forest_matrix(laplacian_of(g), lambda)).transpose()));
    }
  } else if (command == "accessibility") {
    doc["lambda"] = lambda.str();
    if (float_mode(o)) {
      doc["matrix"] = matrix_json(fp::accessibility(g, lambda.to_double()));
    } else {
      try {
        doc["matrix"] = matrix_json(inverse(forest_matrix(laplacian_of(g), lambda)));
      } catch (const SingularMatrixError&) {
        throw SingularMatrixError("forest matrix is singular: total forest weight is zero");
      }
    }
  } else if (command == "charpoly") {
    const RationalMatrix l = laplacian_of(g);
    doc["coeffs"] = float_mode(o) ? coeffs_json(char_poly(to_double(l))) : coeffs_json(char_poly(l));
  } else if (command == "cofactor-poly") {
    require_exact(o, command);
    const int i = vertex_arg(o.from, n, "--from");
    const int j = vertex_arg(o.to, n, "--to");
    doc["from"] = i + 1;
    doc["to"] = j + 1;
    doc["signed"] = o.signed_variant;
    doc["coeffs"] = coeffs_json(o.signed_variant ? signed_adjugate_coeffs(g, i, j) : cofactor_poly(g, i, j));
  } else if (command == "enumerate") {
    doc.update(enumerate(g, o));
  } else if (command == "verify") {
    require_exact(o, command);
    const VerifyReport report = verify(g, guard_from(o));
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back(Json{{"check", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    }
    doc["passed"] = report.passed();
    doc["report"] = std::move(checks);
    verify_failed = !report.passed();
  }
  return doc;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spanning-forest quantities of weighted multigraphs and multidigraphs", "mft"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    bool lambda, pair, enumeration;
  };
  const Spec specs[] = {
      {"laplacian", "Laplacian / Kirchhoff matrix L", false, false, false},
      {"forest-matrix", "Forest matrix lambda*I + L", true, false, false},
      {"det", "det(lambda*I + L), the total forest weight at lambda = 1", true, false, false},
      {"cofactor", "Cofactor (--from, --to) or all cofactors of lambda*I + L", true, true, false},
      {"accessibility", "Relative forest accessibility matrix (lambda*I + L)^-1", true, false, false},
      {"charpoly", "Coefficients of det(lambda*I + L)", false, false, false},
      {"cofactor-poly", "Coefficients of the (--from, --to) cofactor of lambda*I + L", false, true, false},
      {"enumerate", "Brute-force enumeration of trees or forests", false, true, true},
      {"verify", "Check every forest identity against brute-force enumeration", false, false, true},
  };
  for (const Spec& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", o.file, "Graph file")->required();
    sub->add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--mode", o.mode, "Arithmetic backend")->check(CLI::IsMember({"exact", "float"}));
    if (s.lambda) sub->add_option("--lambda", o.lambda, "Diagonal shift lambda (rational)");
    if (s.pair) {
      sub->add_option("--from", o.from, "Vertex i (1-based)");
      sub->add_option("--to", o.to, "Vertex j (1-based)");
    }
    if (std::string(s.name) == "cofactor-poly") sub->add_flag("--signed", o.signed_variant, "Cofactors of lambda*I - L instead");
    if (s.enumeration) sub->add_option("--max-enum", o.max_enum, "Enumeration guard (instances)");
    if (std::string(s.name) == "enumerate") {
      sub->add_option("--roots", o.roots, "Keep forests rooted exactly at these vertices (comma list)");
      sub->add_option("--kind", o.kind, "What to enumerate (default: forests of the graph's kind)")
          ->check(CLI::IsMember({"trees", "rooted-forests", "diverging-forests"}));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    bool verify_failed = false;
    const Json doc = execute(command, o, verify_failed);
    if (o.output == "tsv") {
      out << to_tsv(doc);
    } else {
      out << doc.dump(2) << '\n';
    }
    return verify_failed ? kVerifyFailed : kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  } catch (const SingularMatrixError& e) {
    err << "singular: " << e.what() << '\n';
    return kSingular;
  } catch (const GuardExceeded& e) {
    err << e.what() << '\n';
    return kGuardExceeded;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace mft::cli
