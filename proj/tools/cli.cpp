#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "alexandroff/error.hpp"
#include "alexandroff/frames.hpp"
#include "alexandroff/genposets.hpp"
#include "alexandroff/io.hpp"
#include "alexandroff/lattice.hpp"
#include "alexandroff/nuclei.hpp"
#include "alexandroff/order.hpp"
#include "alexandroff/spectra.hpp"
#include "alexandroff/t2detect.hpp"

namespace alexandroff::cli {

namespace {

struct Config {
  std::string input;
  std::string family;
  std::string kind = "t2";
  std::optional<std::size_t> rank;
  std::size_t depth = 5;
  std::uint64_t budget = 1'000'000;
  std::size_t max_frame = kDefaultFrameCap;
  std::size_t nucleus_frame = NucleusLimits{}.max_frame;
  std::string dot;
  std::string out;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// A preorder input is replaced by its skeleton; Op S does not notice.
Poset load_input(const Config& c, std::ostream& err) {
  auto doc = load_order_document(c.input);
  if (doc.order.is_antisymmetric()) return Poset::from_preorder(doc.order);
  auto sk = skeleton(doc.order);
  err << "note: preorder reduced to its skeleton (" << sk.poset.size() << " classes)\n";
  return sk.poset;
}

NucleusLimits limits_of(const Config& c) {
  NucleusLimits l;
  l.max_frame = c.nucleus_frame;
  return l;
}

// Runs one report line; a guard hit is reported in place instead of aborting.
void section(std::ostream& out, std::string_view label, const std::function<std::string()>& body) {
  try {
    out << label << ": " << body() << "\n";
  } catch (const GuardExceeded& e) {
    out << label << ": skipped (" << e.what() << ")\n";
  }
}

void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.out.empty())
    out << text;
  else
    write_text_file(c.out, text);
}

void write_dot(const Config& c, const std::string& text) {
  if (!c.dot.empty()) write_text_file(c.dot, text);
}

std::string point_label(const UpsetFrame& frame, const Spectrum& x, std::size_t i) {
  auto members = x.point(i).members();
  auto least = *std::min_element(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
    return frame.element(static_cast<Element>(a)).count() < frame.element(static_cast<Element>(b)).count();
  });
  return frame.label(static_cast<Element>(least));
}

std::string point_set(const Spectrum& x, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ",") + x.order().name(i);
    first = false;
  });
  return out + "}";
}

int cmd_skeleton(const Config& c, std::ostream& out) {
  auto doc = load_order_document(c.input);
  auto sk = skeleton(doc.order);
  emit(c, out, poset_to_json(sk.poset));
  out << "classes:\n";
  for (std::size_t k = 0; k < sk.members.size(); ++k) {
    out << "  " << sk.poset.name(k) << ":";
    for (auto m : sk.members[k]) out << " " << doc.order.name(m);
    out << "\n";
  }
  write_dot(c, hasse_dot(sk.poset, "skeleton"));
  return kOk;
}

int cmd_analyze(const Config& c, std::ostream& out, std::ostream& err) {
  Poset s = load_input(c, err);
  auto frame = UpsetFrame::build(s, c.max_frame);
  write_dot(c, frame.hasse_dot());
  out << "elements: " << s.size() << "\n";
  out << "upsets: " << frame.size() << "\n";
  std::optional<FiniteLattice> lattice;
  section(out, "frame boolean", [&] {
    lattice = frame.lattice();
    return yes_no(is_boolean(*lattice));
  });
  section(out, "frame spatial", [&] {
    if (!lattice) throw GuardExceeded("frame lattice unavailable", kDefaultLatticeTableCap);
    return yes_no(is_spatial_finite(*lattice));
  });
  std::optional<Assembly> assembly;
  section(out, "nuclei", [&] {
    if (!lattice) throw GuardExceeded("frame lattice unavailable", kDefaultLatticeTableCap);
    assembly = enumerate_nuclei(*lattice, limits_of(c));
    return std::to_string(assembly->size());
  });
  std::optional<FiniteLattice> assembly_lattice;
  section(out, "assembly boolean", [&] {
    if (!assembly) throw GuardExceeded("assembly unavailable", c.nucleus_frame);
    assembly_lattice = assembly->lattice();
    return yes_no(is_boolean(*assembly_lattice));
  });
  section(out, "assembly spatial", [&] {
    if (!assembly_lattice) throw GuardExceeded("assembly lattice unavailable", 1024);
    return yes_no(is_spatial_finite(*assembly_lattice));
  });
  section(out, "scattered", [&] { return yes_no(is_scattered(s)); });
  section(out, "weakly scattered", [&] { return yes_no(is_weakly_scattered(s)); });
  section(out, "prime filters", [&] {
    if (!lattice) throw GuardExceeded("frame lattice unavailable", kDefaultLatticeTableCap);
    return std::to_string(prime_filters(*lattice).size());
  });
  section(out, "duality", [&] {
    if (!lattice) throw GuardExceeded("frame lattice unavailable", kDefaultLatticeTableCap);
    return std::string(duality_check(*lattice, limits_of(c)).ok() ? "PASS" : "FAIL");
  });
  return kOk;
}

int cmd_nuclei(const Config& c, std::ostream& out, std::ostream& err) {
  Poset s = load_input(c, err);
  auto frame = UpsetFrame::build(s, c.max_frame);
  auto assembly = enumerate_nuclei(frame.lattice(), limits_of(c));
  std::string text = "frame:\n" + frame.dump() + "nuclei: " + std::to_string(assembly.size()) + "\n" + assembly.dump();
  emit(c, out, text);
  write_dot(c, assembly.hasse_dot());
  return kOk;
}

int cmd_assembly(const Config& c, std::ostream& out, std::ostream& err) {
  Poset s = load_input(c, err);
  auto frame = UpsetFrame::build(s, c.max_frame);
  auto assembly = enumerate_nuclei(frame.lattice(), limits_of(c));
  auto l = assembly.lattice();
  std::ostringstream text;
  text << "frame elements: " << frame.size() << "\n";
  text << "nuclei: " << assembly.size() << "\n";
  text << "identity: j" << assembly.identity_index() << "\n";
  text << "top: j" << assembly.top_index() << "\n";
  text << "cross-checked: " << yes_no(assembly.cross_checked()) << "\n";
  text << "join-irreducibles: " << join_irreducibles(l).size() << "\n";
  text << "boolean: " << yes_no(is_boolean(l)) << "\n";
  text << "spatial: " << yes_no(is_spatial_finite(l)) << "\n";
  emit(c, out, text.str());
  write_dot(c, assembly.hasse_dot());
  return kOk;
}

int cmd_spectrum(const Config& c, std::ostream& out, std::ostream& err) {
  Poset s = load_input(c, err);
  auto frame = UpsetFrame::build(s, c.max_frame);
  auto l = frame.lattice();
  auto x = prime_filters(l);
  std::ostringstream text;
  text << "points: " << x.size() << "\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    text << "  " << x.order().name(i) << " = up " << point_label(frame, x, i) << "\n";
  text << "order:\n";
  for (auto [a, b] : covers(x.order())) text << "  " << x.order().name(a) << " < " << x.order().name(b) << "\n";
  auto eps = epsilon(frame, x);
  text << "epsilon:\n";
  for (std::size_t i = 0; i < s.size(); ++i) text << "  " << s.name(i) << " -> " << x.order().name(eps[i]) << "\n";
  text << "epsilon order-isomorphism: " << yes_no(epsilon_is_order_isomorphism(frame, x)) << "\n";
  section(text, "nuclear points", [&] { return point_set(x, nuclear_points(x)); });
  section(text, "max criterion", [&] {
    auto r = spatiality_via_max(x);
    std::string line = r.spatial ? "spatial" : "not spatial, witness " + point_set(x, *r.witness);
    return line + " (" + std::to_string(r.downsets_checked) + " clopen downsets)";
  });
  emit(c, out, text.str());
  write_dot(c, hasse_dot(x.order(), "spectrum"));
  return kOk;
}

int cmd_duality(const Config& c, std::ostream& out, std::ostream& err) {
  Poset s = load_input(c, err);
  auto frame = UpsetFrame::build(s, c.max_frame);
  auto report = duality_check(frame.lattice(), limits_of(c));
  emit(c, out, report.to_text());
  return report.ok() ? kOk : kNegative;
}

int cmd_t2(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.input.empty() == c.family.empty()) throw PreconditionError("t2 needs exactly one of FILE or --family");
  if (c.kind != "t2" && c.kind != "comb") throw ParseError("unknown certificate kind '" + c.kind + "'");
  if (!c.input.empty() || c.rank) {
    Poset host = c.input.empty() ? truncate(*parse_family(c.family), *c.rank) : load_input(c, err);
    if (c.kind == "comb") throw PreconditionError("comb certificates need a split oracle (--family without --rank)");
    const std::string family = c.input.empty() ? c.family : "file:" + c.input;
    auto r = search_t2(host, c.depth, c.budget, family);
    if (r.certificate) {
      emit(c, out, to_text(*r.certificate));
      return kOk;
    }
    err << (r.budget_exhausted ? "search budget exhausted after " : "no embedding; search finished after ") << r.nodes
        << " nodes\n";
    return r.budget_exhausted ? kUnknown : kNegative;
  }
  auto g = parse_family(c.family);
  auto root = g->split_root();
  if (!root) {
    err << c.family << " has no split oracle\n";
    return kUnknown;
  }
  try {
    if (c.kind == "comb")
      emit(c, out, to_text(build_comb(*g, *root, c.depth)));
    else
      emit(c, out, to_text(build_t2(*g, *root, c.depth)));
  } catch (const SplitDeclined& e) {
    err << e.what() << "\n";
    return kUnknown;
  }
  return kOk;
}

int cmd_verdict(const Config& c, std::ostream& out) {
  if (c.input.empty() == c.family.empty()) throw PreconditionError("verdict needs exactly one of FILE or --family");
  auto g = parse_family(c.family.empty() ? "file:" + c.input : c.family);
  VerdictOptions options;
  options.certificate_depth = c.depth;
  options.search_budget = c.budget;
  if (c.rank) options.probe_rank = *c.rank;
  auto v = verdict(*g, options);
  out << v.to_text();
  if (auto* cert = std::get_if<T2Certificate>(&v.evidence)) {
    if (c.out.empty())
      out << "\n" << to_text(*cert);
    else
      write_text_file(c.out, to_text(*cert));
  }
  switch (v.verdict) {
    case Verdict::Spatial: return kOk;
    case Verdict::NotSpatial: return kNegative;
    case Verdict::Unknown: return kUnknown;
  }
  return kInternal;
}

int cmd_verify(const Config& c, std::ostream& out) {
  auto text = read_text_file(c.input);
  GenPosetPtr family;
  if (!c.family.empty()) family = parse_family(c.family);
  auto check = check_certificate(text, family.get());
  std::visit(
      [&](const auto& cert) {
        using T = std::decay_t<decltype(cert)>;
        out << "kind: " << (std::is_same_v<T, T2Certificate> ? "t2" : "comb") << "\n";
        out << "family: " << (family ? family->descriptor() : cert.family) << "\n";
      },
      check.certificate);
  out << "canonical: " << yes_no(check.canonical) << "\n";
  if (!check.result.ok) out << "violation: " << check.result.reason << "\n";
  out << "result: " << (check.ok() ? "PASS" : "FAIL") << "\n";
  return check.ok() ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frames of upsets, nuclei, spectra and binary-tree certificates", "alexandroff"};
  app.require_subcommand(1);
  Config c;

  auto file = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("FILE", c.input, "poset or preorder JSON file");
    if (required) o->required();
  };
  auto frame_flags = [&](CLI::App* sub) {
    sub->add_option("--max-frame-size", c.max_frame, "largest frame of upsets to enumerate")->capture_default_str();
    sub->add_option("--max-nucleus-frame", c.nucleus_frame, "largest frame whose nuclei are enumerated")
        ->capture_default_str();
  };
  auto out_flag = [&](CLI::App* sub) { sub->add_option("--out", c.out, "write the main output to PATH"); };
  auto dot_flag = [&](CLI::App* sub) { sub->add_option("--dot", c.dot, "write a Graphviz diagram to PATH"); };

  auto* skel = app.add_subcommand("skeleton", "collapse a preorder to its skeleton");
  file(skel);
  out_flag(skel);
  dot_flag(skel);

  auto* analyze = app.add_subcommand("analyze", "summary of Op S, its assembly and spectrum");
  file(analyze);
  frame_flags(analyze);
  dot_flag(analyze);

  auto* nuclei = app.add_subcommand("nuclei", "list every nucleus of Op S");
  file(nuclei);
  frame_flags(nuclei);
  out_flag(nuclei);
  dot_flag(nuclei);

  auto* assembly = app.add_subcommand("assembly", "the assembly of Op S");
  file(assembly);
  frame_flags(assembly);
  out_flag(assembly);
  dot_flag(assembly);

  auto* spectrum = app.add_subcommand("spectrum", "prime filters of Op S");
  file(spectrum);
  frame_flags(spectrum);
  out_flag(spectrum);
  dot_flag(spectrum);

  auto* duality = app.add_subcommand("duality-check", "nuclear subsets against nuclei");
  file(duality);
  frame_flags(duality);
  out_flag(duality);

  auto* t2 = app.add_subcommand("t2", "binary-tree or comb certificate from a family, or search in a file poset");
  file(t2, false);
  t2->add_option("--family", c.family, "family descriptor");
  t2->add_option("--kind", c.kind, "t2 or comb")->capture_default_str();
  t2->add_option("--rank", c.rank, "search the truncation of this rank instead of using the split oracle");
  t2->add_option("--depth", c.depth, "tree depth or comb length")->capture_default_str();
  t2->add_option("--budget", c.budget, "search node budget")->capture_default_str();
  out_flag(t2);

  auto* verdict_cmd = app.add_subcommand("verdict", "decide spatiality of the assembly of Op S");
  file(verdict_cmd, false);
  verdict_cmd->add_option("--family", c.family, "family descriptor");
  verdict_cmd->add_option("--depth", c.depth, "certificate depth")->capture_default_str();
  verdict_cmd->add_option("--budget", c.budget, "search node budget")->capture_default_str();
  verdict_cmd->add_option("--rank", c.rank, "truncation rank probed when no oracle applies");
  out_flag(verdict_cmd);

  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("CERT", c.input, "certificate file")->required();
  verify->add_option("--family", c.family, "check against this family instead of the recorded one");

  for (auto* sub : app.get_subcommands({})) {
    for (auto* opt : sub->get_options()) {
      const auto& n = opt->get_name();
      if (n == "--budget" || n == "--max-frame-size" || n == "--max-nucleus-frame") opt->check(CLI::PositiveNumber);
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*skel) return cmd_skeleton(c, out);
    if (*analyze) return cmd_analyze(c, out, err);
    if (*nuclei) return cmd_nuclei(c, out, err);
    if (*assembly) return cmd_assembly(c, out, err);
    if (*spectrum) return cmd_spectrum(c, out, err);
    if (*duality) return cmd_duality(c, out, err);
    if (*t2) return cmd_t2(c, out, err);
    if (*verdict_cmd) return cmd_verdict(c, out);
    if (*verify) return cmd_verify(c, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const RelationError& e) {
    err << "error: " << e.what() << "\n";
    return kRelation;
  } catch (const PresentationError& e) {
    err << "error: " << e.what() << "\n";
    return kRelation;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  return kInternal;
}

}  // namespace alexandroff::cli
