#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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
#include "cli.hpp"

namespace py = pybind11;
using namespace alexandroff;

namespace {

std::vector<std::size_t> members(const ElementSet& s) { return s.members(); }

// pybind11 holders cannot be shared_ptr<const T>.
std::shared_ptr<GenPoset> mutable_ptr(GenPosetPtr p) { return std::const_pointer_cast<GenPoset>(std::move(p)); }

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_alexandroff, m) {
  m.doc() = "Frames of upsets, nuclei, spectra and binary-tree certificates";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<RelationError>(m, "RelationError", base);
  py::register_exception<PreconditionError>(m, "PreconditionError", base);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", base);
  py::register_exception<NotDistributive>(m, "NotDistributive", base);
  py::register_exception<PresentationError>(m, "PresentationError", base);
  py::register_exception<InternalError>(m, "InternalError", base);

  py::class_<Preorder>(m, "Preorder")
      .def_property_readonly("size", &Preorder::size)
      .def_property_readonly("names", &Preorder::names)
      .def("leq", &Preorder::leq)
      .def("is_antisymmetric", &Preorder::is_antisymmetric)
      .def("__len__", &Preorder::size);

  py::class_<Poset, Preorder>(m, "Poset")
      .def("up", [](const Poset& p, std::size_t a) { return members(p.up(a)); })
      .def("down", [](const Poset& p, std::size_t a) { return members(p.down(a)); })
      .def("to_json", &poset_to_json)
      .def("hasse_dot", [](const Poset& p) { return hasse_dot(p); })
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; });

  m.def("parse_order", [](std::string_view text) { return parse_order_document(text).order; });
  m.def("parse_poset", &parse_poset);
  m.def("load_poset", [](const std::string& path) { return load_poset(path); });
  m.def(
      "make_poset",
      [](const std::vector<Pair>& pairs, std::size_t n, std::vector<std::string> names) {
        return make_poset(pairs, n, std::move(names));
      },
      py::arg("pairs"), py::arg("n"), py::arg("names") = std::vector<std::string>{});
  m.def("skeleton", [](const Preorder& p) {
    auto s = skeleton(p);
    return py::make_tuple(s.poset, s.class_of);
  });
  m.def("width", &width);
  m.def("height", &height);

  py::class_<FiniteLattice>(m, "FiniteLattice")
      .def_property_readonly("size", &FiniteLattice::size)
      .def_property_readonly("names", &FiniteLattice::names)
      .def("leq", &FiniteLattice::leq)
      .def("meet", &FiniteLattice::meet)
      .def("join", &FiniteLattice::join)
      .def("implies", &FiniteLattice::implies)
      .def("is_distributive", &FiniteLattice::is_distributive);
  m.def("is_boolean", &is_boolean);
  m.def("is_spatial_finite", &is_spatial_finite);
  m.def("join_irreducibles", py::overload_cast<const FiniteLattice&>(&join_irreducibles));

  py::class_<UpsetFrame>(m, "UpsetFrame")
      .def_static("build", &UpsetFrame::build, py::arg("base"), py::arg("cap") = kDefaultFrameCap)
      .def_property_readonly("size", &UpsetFrame::size)
      .def("element", [](const UpsetFrame& f, Element e) { return members(f.element(e)); })
      .def("index_of",
           [](const UpsetFrame& f, const std::vector<std::size_t>& s) {
             ElementSet set(f.base().size());
             for (auto x : s) {
               if (x >= f.base().size()) throw PreconditionError("element out of range");
               set.insert(x);
             }
             return f.index_of(set);
           })
      .def("label", &UpsetFrame::label)
      .def("leq", &UpsetFrame::leq)
      .def("meet", &UpsetFrame::meet)
      .def("join", &UpsetFrame::join)
      .def("implies", &UpsetFrame::implies)
      .def("lattice", &UpsetFrame::lattice, py::arg("max_elements") = kDefaultLatticeTableCap)
      .def("dump", &UpsetFrame::dump)
      .def("hasse_dot", &UpsetFrame::hasse_dot)
      .def("__len__", &UpsetFrame::size);

  py::class_<Assembly>(m, "Assembly")
      .def_property_readonly("size", &Assembly::size)
      .def_property_readonly("cross_checked", &Assembly::cross_checked)
      .def("nuclei", [](const Assembly& a) {
        std::vector<std::vector<Element>> out;
        for (auto& j : a.nuclei()) out.push_back(j.table);
        return out;
      })
      .def("identity_index", &Assembly::identity_index)
      .def("top_index", &Assembly::top_index)
      .def("leq", &Assembly::leq)
      .def("meet", &Assembly::meet)
      .def("join", &Assembly::join)
      .def("lattice", &Assembly::lattice, py::arg("max_elements") = 1024)
      .def("dump", &Assembly::dump)
      .def("__len__", &Assembly::size);
  m.def(
      "enumerate_nuclei", [](const FiniteLattice& l, std::size_t max_frame) {
        NucleusLimits limits;
        limits.max_frame = max_frame;
        return enumerate_nuclei(l, limits);
      },
      py::arg("lattice"), py::arg("max_frame") = NucleusLimits{}.max_frame);
  m.def("check_nucleus", [](const FiniteLattice& l, const std::vector<Element>& table) {
    auto r = check_nucleus(l, table);
    return r.ok() ? std::string() : r.describe(l);
  });

  py::class_<Spectrum>(m, "Spectrum")
      .def_property_readonly("size", &Spectrum::size)
      .def_property_readonly("order", &Spectrum::order)
      .def("point", [](const Spectrum& x, std::size_t i) { return members(x.point(i)); })
      .def("eta", [](const Spectrum& x, Element a) { return members(x.eta(a)); })
      .def("__len__", &Spectrum::size);
  m.def("prime_filters", &prime_filters);
  m.def("epsilon_is_order_isomorphism", &epsilon_is_order_isomorphism);
  m.def("is_scattered", &is_scattered);
  m.def("is_weakly_scattered", &is_weakly_scattered);
  m.def("spatiality_via_max", [](const Spectrum& x) { return spatiality_via_max(x).spatial; });

  py::class_<DualityReport>(m, "DualityReport")
      .def_readonly("frame_size", &DualityReport::frame_size)
      .def_readonly("spectrum_size", &DualityReport::spectrum_size)
      .def_readonly("nuclear_subset_count", &DualityReport::nuclear_subset_count)
      .def_readonly("nucleus_count", &DualityReport::nucleus_count)
      .def_readonly("bijective", &DualityReport::bijective)
      .def_readonly("order_reversing", &DualityReport::order_reversing)
      .def("ok", &DualityReport::ok)
      .def("to_text", &DualityReport::to_text);
  m.def("duality_check", [](const FiniteLattice& l) { return duality_check(l); });

  py::class_<GenPoset, std::shared_ptr<GenPoset>>(m, "GenPoset")
      .def_property_readonly("descriptor", &GenPoset::descriptor)
      .def("accepts", &GenPoset::accepts)
      .def("leq", &GenPoset::leq)
      .def("elements_up_to", &GenPoset::elements_up_to)
      .def("finite_size", &GenPoset::finite_size)
      .def("has_splitting", &GenPoset::has_splitting)
      .def("split_root", &GenPoset::split_root)
      .def("split", [](const GenPoset& g, const Key& x) -> std::optional<py::tuple> {
        auto w = split(g, x);
        if (!w) return std::nullopt;
        return py::make_tuple(w->base, w->left, w->right);
      });
  m.def("parse_family", [](std::string_view d) { return mutable_ptr(parse_family(d)); });
  m.def(
      "builtin", [](std::string_view name, std::optional<long> k) { return mutable_ptr(builtin(name, k)); }, py::arg("name"),
      py::arg("k") = std::nullopt);
  m.def("truncate", [](const GenPoset& g, std::size_t rank) { return truncate(g, rank); });
  m.def("refute_noetherian", [](const GenPoset& g, std::size_t budget) { return refute_noetherian(g, budget); });
  m.def("refute_artinian", [](const GenPoset& g, std::size_t budget) { return refute_artinian(g, budget); });

  py::class_<T2Certificate>(m, "T2Certificate")
      .def_readonly("family", &T2Certificate::family)
      .def_readonly("depth", &T2Certificate::depth)
      .def_readonly("keys", &T2Certificate::keys)
      .def("at", &T2Certificate::at)
      .def("to_text", [](const T2Certificate& c) { return to_text(c); });
  py::class_<CombCertificate>(m, "CombCertificate")
      .def_readonly("family", &CombCertificate::family)
      .def_readonly("spine", &CombCertificate::spine)
      .def_readonly("teeth", &CombCertificate::teeth)
      .def("to_text", [](const CombCertificate& c) { return to_text(c); });

  m.def("build_t2", [](const GenPoset& g, const Key& root, std::size_t depth) { return build_t2(g, root, depth); });
  m.def("build_comb", [](const GenPoset& g, const Key& root, std::size_t n) { return build_comb(g, root, n); });
  m.def("verify_t2", [](const T2Certificate& c, const GenPoset& g) {
    auto r = verify_t2(c, g);
    return py::make_tuple(r.ok, r.reason);
  });
  m.def(
      "search_t2", [](const Poset& p, std::size_t depth, std::uint64_t budget) { return search_t2(p, depth, budget).certificate; },
      py::arg("poset"), py::arg("depth"), py::arg("budget") = 10'000'000);
  m.def("check_certificate", [](std::string_view text) {
    auto r = check_certificate(text);
    return py::make_tuple(r.ok(), r.result.reason);
  });

  py::class_<SpatialityVerdict>(m, "SpatialityVerdict")
      .def_readonly("family", &SpatialityVerdict::family)
      .def_property_readonly("verdict", [](const SpatialityVerdict& v) { return to_string(v.verdict); })
      .def_property_readonly("evidence_kind", &SpatialityVerdict::evidence_kind)
      .def_readonly("provenance", &SpatialityVerdict::provenance)
      .def_property_readonly("certificate",
                             [](const SpatialityVerdict& v) -> std::optional<T2Certificate> {
                               if (auto* c = std::get_if<T2Certificate>(&v.evidence)) return *c;
                               return std::nullopt;
                             })
      .def("to_text", &SpatialityVerdict::to_text);
  m.def(
      "verdict",
      [](const GenPoset& g, std::size_t depth, std::uint64_t budget) {
        VerdictOptions o;
        o.certificate_depth = depth;
        o.search_budget = budget;
        return verdict(g, o);
      },
      py::arg("family"), py::arg("depth") = 5, py::arg("budget") = 1'000'000);

  m.def("run_cli", &run_cli, "Runs the command-line tool; returns (exit code, stdout, stderr).");
}
