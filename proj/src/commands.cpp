#include "dpcover/commands.hpp"

#include <chrono>
#include <sstream>

#include "dpcover/constructions.hpp"
#include "dpcover/counting.hpp"
#include "dpcover/formulas.hpp"
#include "dpcover/io.hpp"

namespace dpcover {

using nlohmann::json;

namespace {

template <typename Body>
CommandOutcome run_command(std::string name, json params, Body&& body) {
  CommandOutcome out;
  out.command = std::move(name);
  out.params = std::move(params);
  out.payload = json::object();
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const Error& ex) {
    out.ok = false;
    out.error_code = std::string(error_code_name(ex.code()));
    out.error_message = ex.what();
    out.exit_code = error_exit_code(ex.code());
  } catch (const std::exception& ex) {
    out.ok = false;
    out.error_code = std::string(error_code_name(ErrorCode::kInternal));
    out.error_message = ex.what();
    out.exit_code = error_exit_code(ErrorCode::kInternal);
  }
  out.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

void fail_verification(CommandOutcome& out, const std::string& message) {
  out.ok = false;
  out.error_code = "verification-failed";
  out.error_message = message;
  out.exit_code = 1;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render_verify_table(const CommandOutcome& o) {
  std::ostringstream os;
  bool first = true;
  for (const json& row : o.payload.at("rows")) {
    if (!first) os << "\n";
    first = false;
    os << "When m = " << row.at("m").get<int>() << ":\n";
    os << scalar_text(row.at("value")) << "\n";
    if (!row.at("min").is_null()) os << scalar_text(row.at("min")) << "\n";
  }
  return os.str();
}

std::string render_verify_csv(const CommandOutcome& o) {
  std::ostringstream os;
  os << "m,method,value,min,expected,pass\n";
  for (const json& row : o.payload.at("rows")) {
    os << row.at("m").get<int>() << "," << row.at("method").get<std::string>() << ","
       << scalar_text(row.at("value")) << ","
       << (row.at("min").is_null() ? "" : scalar_text(row.at("min"))) << ","
       << scalar_text(row.at("expected")) << "," << (row.at("pass").get<bool>() ? "true" : "false")
       << "\n";
  }
  return os.str();
}

}  // namespace

json CommandOutcome::to_json() const {
  json j;
  j["command"] = command;
  j["params"] = params;
  j["payload"] = payload;
  j["elapsed_ms"] = elapsed_ms;
  j["status"] = ok ? "ok" : "failed";
  if (!ok) j["error"] = {{"code", error_code}, {"message", error_message}};
  return j;
}

std::string render(const CommandOutcome& o, OutputFormat format) {
  if (format == OutputFormat::kJson) return o.to_json().dump(2) + "\n";
  const bool verify_rows = o.command == "verify-k4" && o.payload.contains("rows");
  if (format == OutputFormat::kTable) {
    std::string text;
    if (verify_rows) {
      text = render_verify_table(o);
    } else {
      std::ostringstream os;
      for (const auto& [key, value] : o.payload.items()) os << key << ": " << scalar_text(value) << "\n";
      text = os.str();
    }
    if (!o.ok && !verify_rows) text += "error: " + o.error_code + ": " + o.error_message + "\n";
    return text;
  }
  if (verify_rows) return render_verify_csv(o);
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [key, value] : o.payload.items()) {
    os << csv_field(key) << "," << csv_field(scalar_text(value)) << "\n";
  }
  if (!o.ok) os << "error," << csv_field(o.error_code + ": " + o.error_message) << "\n";
  return os.str();
}

FullCover make_construction(const std::string& kind, std::size_t n, std::size_t m,
                            std::optional<std::uint64_t> seed) {
  if (kind == "canonical") return canonical_cover(complete_graph(n), m);
  if (kind == "even-pairing") return even_pairing_cover(n, m);
  if (kind == "odd-k4") {
    if (n != 4) throw_invalid("odd-k4 construction is defined for n = 4 only");
    return odd_k4_cover(m);
  }
  if (kind == "odd-complete") return odd_complete_cover(n, m);
  if (kind == "random") {
    if (!seed) throw_invalid("random construction requires an explicit --seed");
    return random_cover(complete_graph(n), m, *seed);
  }
  throw_invalid("unknown construction '" + kind +
                "' (expected canonical, even-pairing, odd-k4, odd-complete or random)");
}

CommandOutcome cmd_verify_k4(const VerifyK4Options& options) {
  json params = {{"m_max", options.m_max}, {"threads", options.threads}, {"budget", options.budget}};
  return run_command("verify-k4", params, [&](CommandOutcome& out) {
    if (options.m_max < 2) throw_invalid("--m-max must be at least 2");
    json rows = json::array();
    bool all_pass = true;
    for (int m = 2; m <= options.m_max; ++m) {
      const BigInt expected = dual_k4(m);
      json row = {{"m", m}, {"expected", bigint_json(expected)}};
      BigInt value;
      if (m <= 5) {
        SearchSpec spec;
        spec.graph = complete_graph(4);
        spec.m = static_cast<std::size_t>(m);
        spec.threads = options.threads;
        spec.budget = options.budget;
        const SearchResult r = search_exhaustive(spec);
        value = r.max_value;
        row["method"] = "exhaustive";
        row["min"] = bigint_json(r.min_value);
        row["evaluated"] = r.evaluated;
      } else {
        const FullCover c = m % 2 == 0 ? even_pairing_cover(4, static_cast<std::size_t>(m))
                                       : odd_k4_cover(static_cast<std::size_t>(m));
        value = count_ie(c).value;
        row["method"] = m % 2 == 0 ? "even-pairing construction" : "odd construction";
        row["min"] = nullptr;
      }
      row["value"] = bigint_json(value);
      row["pass"] = value == expected;
      all_pass = all_pass && value == expected;
      rows.push_back(row);
    }
    out.payload["rows"] = rows;
    out.payload["all_pass"] = all_pass;
    if (!all_pass) fail_verification(out, "at least one fold number disagrees with the closed form");
  });
}

CommandOutcome cmd_search(const SearchOptions& o) {
  json params = {{"graph", o.graph},
                 {"m", o.m},
                 {"mode", std::string(mode_name(o.mode))},
                 {"normalization", o.normalization == Normalization::kStar ? "star" : "none"},
                 {"root", o.root},
                 {"reduction", o.reduction == Reduction::kConjugacy ? "conjugacy" : "none"},
                 {"counter", o.counter ? json(std::string(counter_name(*o.counter))) : json("default")},
                 {"budget", o.budget},
                 {"threads", o.threads},
                 {"samples", o.samples ? json(*o.samples) : json(nullptr)},
                 {"seed", o.seed ? json(*o.seed) : json(nullptr)},
                 {"histogram", o.histogram}};
  return run_command("search", params, [&](CommandOutcome& out) {
    SearchSpec spec;
    spec.graph = load_graph(o.graph);
    spec.m = o.m;
    spec.mode = o.mode;
    spec.normalization = o.normalization;
    if (o.root < 1) throw_invalid("--root is 1-indexed");
    spec.root = static_cast<Vertex>(o.root - 1);
    spec.reduction = o.reduction;
    spec.counter = o.counter;
    spec.budget = o.budget;
    spec.threads = o.threads;
    spec.histogram = o.histogram;
    spec.limits = Limits::from_env();
    const auto start = std::chrono::steady_clock::now();
    SearchResult r = [&] {
      if (o.samples) {
        if (!o.seed) throw_invalid("sampled search requires an explicit --seed");
        spec.seed = *o.seed;
        return search_sampled(spec, *o.samples);
      }
      return search_exhaustive(spec);
    }();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.payload = search_result_json(spec, r, o.graph, ms);
  });
}

CommandOutcome cmd_count(const CountOptions& o) {
  json params = {{"cover", o.cover_file ? json(*o.cover_file) : json(nullptr)},
                 {"graph", o.graph ? json(*o.graph) : json(nullptr)},
                 {"construct", o.construct ? json(*o.construct) : json(nullptr)},
                 {"n", o.n},
                 {"m", o.m},
                 {"seed", o.seed ? json(*o.seed) : json(nullptr)},
                 {"counter", o.counter}};
  return run_command("count", params, [&](CommandOutcome& out) {
    if (o.cover_file.has_value() == o.construct.has_value()) {
      throw_invalid("give exactly one of --cover or --construct");
    }
    const Limits limits = Limits::from_env();
    const FullCover cover = [&] {
      if (o.cover_file) {
        std::optional<Graph> g;
        if (o.graph) g = load_graph(*o.graph);
        return cover_from_json(read_json_file(*o.cover_file), g);
      }
      return make_construction(*o.construct, o.n, o.m, o.seed);
    }();
    const bool is_k4 = cover.graph() == complete_graph(4);

    auto run_one = [&](const std::string& which) -> BigInt {
      if (which == "brute") return count_brute(cover, limits).value;
      if (which == "ie") return count_ie(cover, limits).value;
      if (which == "k4") {
        if (!is_k4) throw_invalid("the k4 counter only applies to covers of K4");
        return count_k4_identity(cycle_stats(cover, catalog_subgraphs(cover.graph())), cover.fold())
            .value;
      }
      throw_invalid("unknown counter '" + which + "' (expected brute, ie, k4, all or default)");
    };

    json counts = json::object();
    BigInt value = 0;
    bool agree = true;
    if (o.counter == "all") {
      std::optional<BigInt> reference;
      std::vector<std::string> which{"brute", "ie"};
      if (is_k4) which.push_back("k4");
      for (const auto& w : which) {
        BigInt v;
        try {
          v = run_one(w);
        } catch (const Error& ex) {
          // A counter outside its resource limits is reported, not fatal.
          if (ex.code() != ErrorCode::kResourceLimit) throw;
          counts[w] = "skipped: " + std::string(ex.what());
          continue;
        }
        counts[w] = bigint_json(v);
        if (!reference) reference = v;
        agree = agree && *reference == v;
      }
      if (!reference) throw_resource("no counter could run within its limits");
      value = *reference;
    } else {
      const std::string which = o.counter == "default" ? (is_k4 ? "k4" : "ie") : o.counter;
      value = run_one(which);
      counts[which] = bigint_json(value);
    }
    out.payload["graph"] = graph_to_json(cover.graph());
    out.payload["m"] = cover.fold();
    out.payload["value"] = bigint_json(value);
    out.payload["counts"] = counts;
    out.payload["agree"] = agree;
    if (!agree) fail_verification(out, "counters disagree");
  });
}

CommandOutcome cmd_signed(const SignedOptions& o) {
  json params = {{"n", o.n},
                 {"lambda", o.lambda},
                 {"compare_dual", o.compare_dual},
                 {"graph", o.graph ? json(*o.graph) : json(nullptr)}};
  return run_command("signed", params, [&](CommandOutcome& out) {
    const SignedGraph sg = o.graph ? signed_graph_from_json(load_graph_json(*o.graph))
                                   : all_negative_signing(o.n);
    const ColorSetSpec colors(o.lambda);
    const BigInt value = count_signed(sg, colors, Limits::from_env()).value;
    out.payload["graph"] = signed_graph_to_json(sg);
    out.payload["lambda"] = o.lambda;
    out.payload["colors"] = colors.colors();
    out.payload["value"] = bigint_json(value);
    if (o.compare_dual) {
      const bool applicable = !o.graph && o.n == 4 && o.lambda % 2 == 0;
      out.payload["dual_comparable"] = applicable;
      if (applicable) {
        const BigInt dual = dual_k4(o.lambda);
        out.payload["dual_k4"] = bigint_json(dual);
        out.payload["equal"] = dual == value;
        if (dual != value) fail_verification(out, "signed count differs from the K4 dual value");
      }
    }
  });
}

CommandOutcome cmd_bounds(const BoundsOptions& o) {
  json params = {{"n", o.n}, {"m", o.m}, {"check_construction", o.check_construction}};
  return run_command("bounds", params, [&](CommandOutcome& out) {
    const BoundPair b = complete_dual_bounds(o.n, o.m);
    out.payload["n"] = o.n;
    out.payload["m"] = o.m;
    out.payload["threshold"] = bigint_json(b.threshold);
    out.payload["threshold_cleared"] = b.applies;
    out.payload["f"] = bigint_json(b.f_value);
    out.payload["slack"] = bigint_json(b.slack);
    out.payload["lower"] = bigint_json(b.lower);
    out.payload["upper"] = bigint_json(b.upper);
    if (!b.applies) {
      out.payload["notice"] = "threshold not cleared: the bounds are not asserted for this m";
    }
    if (o.n == 4 && o.m >= 2) out.payload["dual_k4"] = bigint_json(dual_k4(o.m));
    if (o.check_construction) {
      if (o.m < 2) throw_invalid("construction check needs m >= 2");
      const auto n = static_cast<std::size_t>(o.n);
      const auto m = static_cast<std::size_t>(o.m);
      const bool even = m % 2 == 0;
      const FullCover c = even ? even_pairing_cover(n, m) : odd_complete_cover(n, m);
      const BigInt value = count_ie(c, Limits::from_env()).value;
      const bool within = b.lower <= value && value <= b.upper;
      out.payload["construction"] = even ? "even-pairing" : "odd-complete";
      out.payload["construction_count"] = bigint_json(value);
      out.payload["within_bounds"] = within;
      out.payload["triangle_free"] = is_cover_triangle_free(c, catalog_subgraphs(c.graph()));
      if (b.applies && !within) fail_verification(out, "construction count lies outside the bounds");
    }
  });
}

CommandOutcome cmd_construct(const ConstructOptions& o) {
  json params = {{"kind", o.kind}, {"n", o.n}, {"m", o.m}, {"seed", o.seed ? json(*o.seed) : json(nullptr)}};
  return run_command("construct", params, [&](CommandOutcome& out) {
    out.payload = cover_to_json(make_construction(o.kind, o.n, o.m, o.seed), true);
  });
}

}  // namespace dpcover
