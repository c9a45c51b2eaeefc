// krc: command line front end and HTTP service
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "krc/http.hpp"
#include "krc/verify.hpp"

using namespace krc;

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::pair<long, long> parse_pair(const std::string& text, const char* what) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    size_t u1 = 0, u2 = 0;
    std::string l = text.substr(0, comma), r = text.substr(comma + 1);
    long a = std::stol(l, &u1), b = std::stol(r, &u2);
    if (u1 != l.size() || u2 != r.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(what) + " must look like a,b: " + text);
  }
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("not an integer list: " + text);
    }
  }
  return v;
}

// "default" or a JSON object such as {"xi":[0,1,2]} or {"period_i":[...],"period_p":[...]}
json sequence_config(const std::string& type, const std::string& seq) {
  json j = json::object();
  if (seq != "default") {
    j = json::parse(seq, nullptr, false);
    if (!j.is_object()) throw UsageError("--seq must be 'default' or a JSON object");
  }
  j["type"] = type;
  return j;
}

json session_config(const std::string& type, const std::string& seq, const std::string& chain,
                    const std::string& range) {
  json c{{"type", type}};
  if (seq != "default") c["seq"] = sequence_config(type, seq);
  if (!chain.empty()) c["chain"] = chain;
  if (!range.empty()) {
    auto [a, b] = parse_pair(range, "--range");
    c["range"] = {a, b};
  }
  if (chain.empty() && range.empty()) throw UsageError("give --chain or --range");
  return c;
}

void print_seed(const Session& s, bool as_json) {
  if (as_json) {
    json st = s.state();
    st["variables"] = s.variables()["variables"];
    std::cout << st.dump(2) << "\n";
    return;
  }
  json st = s.state(), vars = s.variables()["variables"];
  if (st["attached"].get<bool>()) std::cout << "chain " << st["chain"].get<std::string>() << "\n";
  const auto& B = s.seed().seed.B;
  for (int k = 0; k < B.size(); ++k) {
    const auto& v = st["vertices"][k];
    std::cout << k + 1 << " " << (v["box"].is_null() ? "-" : v["box"].get<std::string>()) << " "
              << (v["exchangeable"].get<bool>() ? "ex" : "fr") << " "
              << (v["label"].is_null() ? "-" : v["label"].get<std::string>()) << "  "
              << vars[k]["text"].get<std::string>() << "\n";
  }
  for (int i = 0; i < B.size(); ++i) {
    for (int j = 0; j < B.size(); ++j) std::cout << (j ? " " : "") << B(i, j);
    std::cout << "\n";
  }
}

int default_port() {
  if (const char* p = std::getenv("KRC_PORT")) {
    try {
      return std::stoi(p);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("KRC_PORT is not a number: ") + p);
    }
  }
  return 8080;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cluster engine for KR modules, T-systems and box moves"};
  app.require_subcommand(1);

  std::string type = "A3", seq = "default", chain, range, xi, box, window, suite = "all", state_file;
  std::string bind = "127.0.0.1";
  std::vector<int> at;
  std::vector<std::string> types;
  double budget = 0;
  unsigned seed = 1;
  bool as_json = false, labels = false;
  int port = -1;

  auto add_seq = [&](CLI::App* c) {
    c->add_option("--type", type, "affine type, e.g. A3, B2, D4^(3)");
    c->add_option("--seq", seq, "'default' or a JSON sequence object");
  };

  auto* v_cmd = app.add_subcommand("validate", "check a height function or an admissible sequence");
  add_seq(v_cmd);
  v_cmd->add_option("--xi", xi, "height function, comma separated");

  auto* s_cmd = app.add_subcommand("seed", "seed of a chain of i-boxes");
  add_seq(s_cmd);
  s_cmd->add_option("--chain", chain, "chain as a:CODE, e.g. 0:LL");
  s_cmd->add_option("--range", range, "canonical chain on a,b");
  s_cmd->add_flag("--json", as_json);

  auto* m_cmd = app.add_subcommand("mutate", "mutate a chain seed at 1-based indices");
  add_seq(m_cmd);
  m_cmd->add_option("--chain", chain);
  m_cmd->add_option("--range", range);
  m_cmd->add_option("--at", at, "vertex, repeatable")->required();
  m_cmd->add_flag("--json", as_json);

  auto* b_cmd = app.add_subcommand("boxmove", "apply box moves to a chain");
  b_cmd->add_option("--chain", chain)->required();
  b_cmd->add_option("--at", at, "move index, repeatable")->required();

  auto* t_cmd = app.add_subcommand("tsystem", "T-system relation of an i-box");
  add_seq(t_cmd);
  t_cmd->add_option("--box", box, "a,b")->required();

  auto* f_cmd = app.add_subcommand("verify", "run property suites");
  f_cmd->add_option("--suite", suite, "suite name or 'all'");
  f_cmd->add_option("--type", types, "restrict to types (repeatable)");
  f_cmd->add_option("--window", window, "index window a,b");
  f_cmd->add_option("--budget", budget, "seconds per suite");
  f_cmd->add_option("--seed", seed, "random seed");

  auto* d_cmd = app.add_subcommand("export-dot", "GLS quiver of a window, or the quiver of a chain seed");
  add_seq(d_cmd);
  d_cmd->add_option("--window", window, "a,b");
  d_cmd->add_option("--chain", chain);
  d_cmd->add_flag("--labels", labels);

  auto* h_cmd = app.add_subcommand("serve", "HTTP/JSON session service");
  h_cmd->add_option("--port", port, "default from KRC_PORT, else 8080");
  h_cmd->add_option("--bind", bind);
  h_cmd->add_option("--state-file", state_file, "persist sessions to this JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*v_cmd) {
      if (!xi.empty()) {
        auto v = validate_q_datum(QDatum{folded_datum(type), parse_ints(xi)});
        std::cout << (v.ok ? "valid" : "invalid") << "\n";
        for (const auto& d : v.diagnostics) std::cout << "  " << d << "\n";
        return v.ok ? 0 : 1;
      }
      auto v = validate_sequence(sequence_from_json(sequence_config(type, seq)));
      std::cout << (v.ok ? "valid" : "invalid") << "\n";
      for (const auto& d : v.diagnostics) std::cout << "  " << d << "\n";
      return v.ok ? 0 : 1;
    }
    if (*s_cmd) {
      print_seed(Session(session_config(type, seq, chain, range)), as_json);
      return 0;
    }
    if (*m_cmd) {
      Session s(session_config(type, seq, chain, range));
      for (int k : at) s.mutate(k);
      print_seed(s, as_json);
      return 0;
    }
    if (*b_cmd) {
      Chain c = parse_chain(chain);
      for (int s : at) c = box_move(c, s);
      std::cout << to_string(c) << "\n";
      return 0;
    }
    if (*t_cmd) {
      auto [a, b] = parse_pair(box, "--box");
      auto sq = sequence_from_json(sequence_config(type, seq));
      std::cout << format_relation(t_relation(sq, {a, b})) << "\n";
      return 0;
    }
    if (*f_cmd) {
      verify::Options o;
      for (const auto& t : types) {
        std::stringstream ss(t);
        for (std::string one; std::getline(ss, one, ',');) o.types.push_back(one);
      }
      if (!window.empty()) o.window = parse_pair(window, "--window");
      o.budget = budget;
      o.seed = seed;
      std::vector<std::string> names;
      if (suite == "all")
        for (const auto& s : verify::suites()) names.push_back(s.name);
      else
        names.push_back(suite);
      bool ok = true;
      for (const auto& n : names) {
        auto r = verify::run(n, o);
        ok = ok && r.ok;
        std::cout << verify::format(r) << "\n";
      }
      return ok ? 0 : 1;
    }
    if (*d_cmd) {
      if (!chain.empty()) {
        Session s(session_config(type, seq, chain, ""));
        std::cout << export_dot(s.quiver(), labels) << "\n";
        return 0;
      }
      if (window.empty()) throw UsageError("give --window or --chain");
      auto [a, b] = parse_pair(window, "--window");
      auto sq = sequence_from_json(sequence_config(type, seq));
      std::cout << export_dot(gls_quiver(sq, a, b), labels) << "\n";
      return 0;
    }
    if (*h_cmd) {
      if (port < 0) port = default_port();
      SessionStore store(state_file);
      httplib::Server srv;
      mount_routes(srv, store);
      std::cerr << "listening on " << bind << ":" << port << std::endl;
      if (!srv.listen(bind, port)) {
        std::cerr << "cannot listen on " << bind << ":" << port << "\n";
        return 1;
      }
      return 0;
    }
  } catch (const ServiceError& e) {
    std::cerr << "error: " << e.error << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
