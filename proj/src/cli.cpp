#include "kiss4d/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "kiss4d/catalog.hpp"
#include "kiss4d/classify.hpp"
#include "kiss4d/cover_graph.hpp"
#include "kiss4d/document.hpp"
#include "kiss4d/projection.hpp"
#include "kiss4d/search.hpp"

namespace kiss4d {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

double default_tolerance() {
  if (const char* env = std::getenv("KISS4D_TOL"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0)) throw UsageError("KISS4D_TOL is not a non-negative number");
    return v;
  }
  return tol::kKissing;
}

std::string num(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int cmd_catalog(Context& ctx, const std::string& id, bool fibered, bool list) {
  if (list || id.empty()) {
    for (const auto& known : catalog_ids()) ctx.out << known << "\n";
    return kExitOk;
  }
  const auto& ids = catalog_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UsageError("unknown catalog id '" + id + "'");
  const auto entry = make_catalog_entry(id);
  if (id == "cohn-woo-22") {
    const auto cw = make_cohn_woo();
    for (const auto& v : cw.printed_norm_violations) {
      ctx.err << "printed circle off S^2: " << v.circle << " |a|^2+t^2=" << num(v.norm_sq) << "\n";
    }
    ctx.err << "printed layout: " << cw.printed_signature.to_string() << "\n";
    ctx.err << "printed antipodal pairs: " << cw.printed_antipodal_pairs << "\n";
    for (const auto& s : cw.stages) {
      ctx.err << "stage " << s.name << ": points=" << s.point_count << " pairs=" << s.antipodal_pairs;
      if (s.report) ctx.err << " kissing=" << (s.report->is_kissing ? "yes" : "no") << " min=" << num(s.report->min_distance);
      else ctx.err << " off-sphere";
      ctx.err << "\n";
    }
    ctx.err << "status: " << (entry.verified ? "verified" : "diagnosed") << "\n";
    for (const auto& line : cw.diagnosis) ctx.err << "  " << line << "\n";
  }
  if (fibered) {
    const auto f = entry.fibered ? *entry.fibered : group_into_circles(entry.configuration);
    ctx.out << emit_document(make_document(f, id));
  } else {
    ctx.out << emit_document(make_document(entry.configuration, id));
  }
  return kExitOk;
}

double resolve_tol(const ConfigDocument& doc, const std::optional<double>& flag) {
  if (flag) return *flag;
  if (doc.tolerance) return *doc.tolerance;
  return default_tolerance();
}

int cmd_verify(Context& ctx, const std::string& path, const std::optional<double>& tol_flag) {
  const auto doc = parse_document(read_input(path, ctx.in));
  const double tol = resolve_tol(doc, tol_flag);
  const auto c = to_configuration(doc);
  const auto report = verify_kissing(c, tol);
  ctx.out << "kissing: " << (report.is_kissing ? "true" : "false") << "\n";
  ctx.out << "points: " << c.size() << "\n";
  ctx.out << "min_distance: " << num(report.min_distance) << "\n";
  if (c.size() >= 2) ctx.out << "argmin_pair: " << report.argmin_pair.first << " " << report.argmin_pair.second << "\n";
  ctx.out << "tolerance: " << num(tol) << "\n";
  ctx.out << "violations: " << report.violations.size() << "\n";
  for (const auto& [pair, d] : report.violations) {
    ctx.out << "violation " << pair.first << " " << pair.second << " " << num(d) << "\n";
  }
  if (!report.is_kissing) ctx.err << "configuration is not kissing\n";
  return report.is_kissing ? kExitOk : kExitDomain;
}

int cmd_signature(Context& ctx, const std::string& path) {
  const auto c = to_configuration(parse_document(read_input(path, ctx.in)));
  const auto f = group_into_circles(c);
  const auto sig = signature(f);
  ctx.out << "signature: " << sig.to_string() << "\n";
  ctx.out << "circles: " << f.circles.size() << "\n";
  ctx.out << "points: " << sig.total() << "\n";
  return kExitOk;
}

int cmd_reduce(Context& ctx, const std::string& path, std::uint64_t seed) {
  const auto c = to_configuration(parse_document(read_input(path, ctx.in)));
  const auto sig = irreducible_signature(c, seed);
  const auto pairs = antipodal_pairs(c);
  ctx.out << "irreducible_signature: " << sig.to_string() << "\n";
  ctx.out << "antipodal_pairs: " << pairs.size() << "\n";
  ctx.out << "singletons: " << c.size() - 2 * pairs.size() << "\n";
  return kExitOk;
}

int cmd_cover_graph(Context& ctx, const std::string& path, const std::optional<double>& tol_flag) {
  auto doc = parse_document(read_input(path, ctx.in));
  const double tol = resolve_tol(doc, tol_flag);
  const auto c = to_configuration(doc);
  if (!verify_kissing(c, tol).is_kissing) {
    ctx.err << "configuration is not kissing\n";
    return kExitDomain;
  }
  auto out = make_document(c, doc.name);
  out.tolerance = doc.tolerance;
  out.cover_graph = build_cover_graph(c, tol);
  ctx.err << "cover graph: " << out.cover_graph->size() << " singletons, " << out.cover_graph->edge_count()
          << " bonds\n";
  ctx.out << emit_document(out);
  return kExitOk;
}

int cmd_classify(Context& ctx, int pairs, int singles) {
  ctx.out << classify_signature(pairs, singles).to_string();
  return kExitOk;
}

int cmd_enumerate(Context& ctx, std::size_t n, const std::optional<std::size_t>& degree) {
  const auto graphs = enumerate_admissible_graphs(n, degree);
  ctx.out << "graphs: " << graphs.size() << "\n";
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    ctx.out << "graph " << k << ":";
    for (const auto& [u, v] : graphs[k].edges()) ctx.out << " " << u << "-" << v;
    ctx.out << "\n";
  }
  return kExitOk;
}

int cmd_search(Context& ctx, const SearchParams& params) {
  const auto result = maximin_optimize(params);
  ctx.err << "best restart: " << result.restart_index << "\n";
  ctx.err << "min_distance: " << num(result.min_distance) << "\n";
  ctx.out << emit_document(make_document(result.configuration, "search-" + std::to_string(params.point_count) +
                                                                    "-seed-" + std::to_string(params.seed)));
  return kExitOk;
}

int cmd_project(Context& ctx, const std::string& path, const std::string& plane, const std::string& format) {
  Plane axes;
  try {
    axes = parse_plane(plane);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const auto c = to_configuration(parse_document(read_input(path, ctx.in)));
  const auto plot = project_orthographic(c, axes);
  ctx.out << (format == "svg" ? render_svg(plot) : render_csv(plot));
  return kExitOk;
}

int cmd_fiber(Context& ctx, const std::string& path, const std::string& to, bool degrees) {
  const auto doc = parse_document(read_input(path, ctx.in));
  const auto c = to_configuration(doc);
  if (to == "s3") {
    ctx.out << emit_document(make_document(c, doc.name));
    return kExitOk;
  }
  const auto f = group_into_circles(c);
  if (!degrees) {
    ctx.out << emit_document(make_document(f, doc.name));
    return kExitOk;
  }
  const double k = 180.0 / std::numbers::pi;
  ctx.out << "circle,alpha_deg,phi_deg,theta_deg\n";
  for (std::size_t i = 0; i < f.circles.size(); ++i) {
    const auto& circle = f.circles[i];
    for (double theta : circle.thetas) {
      ctx.out << i << "," << num(circle.base.alpha * k) << "," << num(circle.base.phi * k) << "," << num(theta * k)
              << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Tools for unit-sphere kissing arrangements on S^3", "kiss4d"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file, id, plane = "x1x2", format = "svg", to;
  std::optional<double> tol_flag;
  std::uint64_t seed = 1;
  bool fibered = false, list = false, degrees = false;
  int pairs = 0, singles = 0;
  std::size_t n = 0;
  std::optional<std::size_t> degree;
  SearchParams params;

  auto* catalog = app.add_subcommand("catalog", "emit a named configuration");
  catalog->add_option("id", id, "24cell, 3x6, 16x1, 6x2+4x1 or cohn-woo-22");
  catalog->add_flag("--fibered", fibered, "emit the fibered form");
  catalog->add_flag("--list", list, "list catalog identifiers");
  catalog->callback([&] { action = [&] { return cmd_catalog(ctx, id, fibered, list); }; });

  auto* verify = app.add_subcommand("verify", "check pairwise chords >= 1");
  verify->add_option("file", file, "configuration document, - for stdin")->required();
  verify->add_option("--tol", tol_flag, "kissing tolerance");
  verify->callback([&] { action = [&] { return cmd_verify(ctx, file, tol_flag); }; });

  auto* sig = app.add_subcommand("signature", "circle sizes under the Hopf projection");
  sig->add_option("file", file)->required();
  sig->callback([&] { action = [&] { return cmd_signature(ctx, file); }; });

  auto* reduce = app.add_subcommand("reduce", "signature after a generic rotation");
  reduce->add_option("file", file)->required();
  reduce->add_option("--seed", seed, "rotation seed");
  reduce->callback([&] { action = [&] { return cmd_reduce(ctx, file, seed); }; });

  auto* cover = app.add_subcommand("cover-graph", "cover graph of the singletons");
  cover->add_option("file", file)->required();
  cover->add_option("--tol", tol_flag);
  cover->callback([&] { action = [&] { return cmd_cover_graph(ctx, file, tol_flag); }; });

  auto* classify = app.add_subcommand("classify", "verdict for N antipodal pairs and n singletons");
  classify->add_option("N", pairs)->required()->check(CLI::NonNegativeNumber);
  classify->add_option("n", singles)->required()->check(CLI::NonNegativeNumber);
  classify->callback([&] { action = [&] { return cmd_classify(ctx, pairs, singles); }; });

  auto* enumerate = app.add_subcommand("enumerate", "triangle-free graphs up to isomorphism");
  enumerate->add_option("n", n)->required();
  enumerate->add_option("--degree", degree, "keep graphs with every degree equal to this");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(ctx, n, degree); }; });

  auto* search = app.add_subcommand("search", "maximin search on S^3");
  search->add_option("--points", params.point_count, "number of points")->required();
  search->add_option("--restarts", params.restarts, "independent random starts");
  search->add_option("--seed", params.seed, "base seed");
  search->add_option("--exponent", params.repulsion_exponent, "Riesz energy exponent");
  search->add_flag("--antipodal", params.antipodal, "search centrally symmetric configurations only");
  search->add_option("--descent-steps", params.descent_steps, "energy descent iterations");
  search->add_option("--refine-steps", params.maximin_refine_steps, "soft-min ascent iterations");
  search->add_option("--threads", params.threads, "worker threads (results do not depend on it)");
  search->callback([&] { action = [&] { return cmd_search(ctx, params); }; });

  auto* project = app.add_subcommand("project", "orthographic projection plot");
  project->add_option("file", file)->required();
  project->add_option("--plane", plane, "x1x2, x1x3, x1x4, x2x3, x2x4 or x3x4");
  project->add_option("--out", format, "output format")->check(CLI::IsMember({"svg", "csv"}));
  project->callback([&] { action = [&] { return cmd_project(ctx, file, plane, format); }; });

  auto* fiber = app.add_subcommand("fiber", "convert between point and fibered forms");
  fiber->add_option("file", file)->required();
  fiber->add_option("--to", to, "target form: s2 (fibered) or s3 (points)")->required()->check(CLI::IsMember({"s2", "s3"}));
  fiber->add_flag("--degrees", degrees, "print angles in degrees instead of a document");
  fiber->callback([&] { action = [&] { return cmd_fiber(ctx, file, to, degrees); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace kiss4d
