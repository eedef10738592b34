#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ogglab/brandt.hpp"
#include "ogglab/cli.hpp"
#include "ogglab/elliptic.hpp"
#include "ogglab/errors.hpp"
#include "ogglab/exact_linalg.hpp"
#include "ogglab/hecke_algebra.hpp"
#include "ogglab/module_iso.hpp"
#include "ogglab/ogg_predictor.hpp"

namespace py = pybind11;
using namespace ogglab;

namespace {

// Big integers cross the boundary as decimal strings.
py::int_ toPy(const Integer& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Integer fromPy(const py::handle& h) { return parseInteger(py::str(h).cast<std::string>()); }

py::list toPy(const IntVector& v) {
    py::list out;
    for (const auto& x : v) out.append(toPy(x));
    return out;
}

py::list toPy(const IntMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(toPy(m.row(i)));
    return out;
}

py::list toPy(const IntPoly& f) { return toPy(IntVector(f.coeffs)); }

IntMatrix matrixFromPy(const py::handle& h) {
    std::vector<IntVector> rows;
    std::size_t cols = 0;
    for (auto r : h) {
        IntVector row;
        for (auto x : r) row.push_back(fromPy(x));
        if (!rows.empty() && row.size() != cols) throw InvalidInput("ragged matrix");
        cols = row.size();
        rows.push_back(std::move(row));
    }
    return IntMatrix::fromRows(rows, cols);
}

std::vector<IntMatrix> familyFromPy(const py::handle& h) {
    std::vector<IntMatrix> out;
    for (auto m : h) out.push_back(matrixFromPy(m));
    return out;
}

py::dict obstructionToPy(const Obstruction& o) {
    py::dict d;
    d["kind"] = toString(o.kind);
    d["prime"] = o.prime;
    d["budget"] = o.budget;
    d["points_checked"] = toPy(o.pointsChecked);
    d["detail"] = o.detail;
    if (o.generatorIndex) {
        d["generator_index"] = *o.generatorIndex;
        d["left_charpoly"] = toPy(o.leftCharpoly);
        d["right_charpoly"] = toPy(o.rightCharpoly);
    }
    return d;
}

py::dict isoToPy(const IsoResult& r) {
    if (auto* c = std::get_if<IsoCertificate>(&r)) {
        py::dict d;
        d["kind"] = "certificate";
        d["witness"] = toPy(c->witness);
        d["determinant"] = toPy(c->determinant);
        return d;
    }
    return obstructionToPy(std::get<Obstruction>(r));
}

py::list heckeFamily(const BrandtModule& b, const std::vector<long>& indices, bool cuspidal) {
    py::list out;
    for (long n : indices) out.append(toPy(cuspidal ? b.cuspidalHecke(n) : b.brandtMatrix(n)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_ogglab, m) {
    m.doc() = "Exact arithmetic on Brandt modules and Hecke algebras";

    auto base = py::register_exception<Error>(m, "OgglabError");
    py::register_exception<InvalidInput>(m, "InvalidInput", base);
    py::register_exception<NotApplicable>(m, "NotApplicable", base);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);
    py::register_exception<NonCommuting>(m, "NonCommuting", base);
    py::register_exception<BadReduction>(m, "BadReduction", base);

    m.def("det", [](const py::object& a) { return toPy(det(matrixFromPy(a))); });
    m.def("hnf", [](const py::object& a) { return toPy(hnf(matrixFromPy(a))); });
    m.def("snf", [](const py::object& a) { return toPy(snf(matrixFromPy(a)).diag); },
          "Smith invariants, each dividing the next");
    m.def("charpoly", [](const py::object& a) { return toPy(charpoly(matrixFromPy(a))); },
          "Coefficients, constant term first");
    m.def("rank", [](const py::object& a) { return rank(matrixFromPy(a)); });

    py::class_<BrandtModule>(m, "BrandtModule")
        .def_static("build", &BrandtModule::build, py::arg("p"), py::arg("q"),
                    py::call_guard<py::gil_scoped_release>())
        .def_property_readonly("p", &BrandtModule::p)
        .def_property_readonly("q", &BrandtModule::q)
        .def_property_readonly("class_count", &BrandtModule::classCount)
        .def_property_readonly("cuspidal_rank", &BrandtModule::cuspidalRank)
        .def_property_readonly("weights", [](const BrandtModule& b) { return b.classes().weights; })
        .def_property_readonly("mass", [](const BrandtModule& b) {
            Rational r = b.classes().mass();
            return py::make_tuple(toPy(r.get_num()), toPy(r.get_den()));
        })
        .def("brandt_matrix", [](const BrandtModule& b, long n) { return toPy(b.brandtMatrix(n)); })
        .def("atkin_lehner", [](const BrandtModule& b, long l) { return toPy(b.atkinLehner(l)); })
        .def("cuspidal_hecke", [](const BrandtModule& b, long n) { return toPy(b.cuspidalHecke(n)); })
        .def("hecke_family", &heckeFamily, py::arg("indices"), py::arg("cuspidal") = true);

    m.def("eichler_mass", [](long p, long q) {
        Rational r = eichlerMass(p, q);
        return py::make_tuple(toPy(r.get_num()), toPy(r.get_den()));
    });
    m.def("sturm_bound", &sturmBound);

    m.def("hecke_discriminant", [](const std::map<long, py::object>& ops, long bound, long p, long q) {
        std::map<long, IntMatrix> mats;
        for (const auto& [n, o] : ops) mats[n] = matrixFromPy(o);
        return toPy(discriminant(buildHeckeAlgebra(mats, bound, p, q)));
    });

    m.def("eisenstein_quotient", [](const BrandtModule& b, const std::string& variant, long ell) {
        EisensteinVariant v = EisensteinVariant::PlainE;
        if (variant == "m+-") v = EisensteinVariant::MPlusMinus;
        else if (variant == "m-+") v = EisensteinVariant::MMinusPlus;
        else if (variant != "E") throw InvalidInput("variant must be E, m+- or m-+");
        const long bound = sturmBound(b.p(), b.q());
        std::map<long, IntMatrix> ops;
        for (long n = 1; n <= bound; ++n) ops[n] = b.cuspidalHecke(n);
        return toPy(eisensteinQuotient(buildHeckeAlgebra(ops, bound, b.p(), b.q()), v, ell).invariantFactors);
    }, py::arg("module"), py::arg("variant") = "E", py::arg("ell") = 0,
       "Invariant factors of T / I on the cuspidal lattice, 0 standing for Z");

    m.def("iso_check", [](const py::object& s, const py::object& t, long budget) {
        auto h = homLattice(familyFromPy(s), familyFromPy(t));
        return isoToPy(findUnimodular(h, budget));
    }, py::arg("s"), py::arg("t"), py::arg("budget") = 5);
    m.def("verify_certificate", [](const py::object& s, const py::object& t, const py::object& x) {
        return verifyCertificate(familyFromPy(s), familyFromPy(t), matrixFromPy(x));
    });
    m.def("conjugacy_check", [](const py::object& a, const py::object& b, long budget) {
        return isoToPy(conjugacyCheck(matrixFromPy(a), matrixFromPy(b), budget));
    }, py::arg("a"), py::arg("b"), py::arg("budget") = 5);

    m.def("predicted_kernel", [](long p, long q) {
        auto r = predictedKernel(p, q);
        return toPy(r.kernelShape);
    }, "Invariant factors of the predicted kernel; [] is the trivial group");
    m.def("group_orders", [](long p, long q) {
        auto g = groupOrders(p, q);
        py::dict d;
        d["cuspidal_shape"] = toPy(g.cuspidalShape);
        d["shimura_order"] = toPy(g.shimuraOrder);
        d["phi_q_order"] = toPy(g.phiQOrder);
        d["shimura_curve_component_order"] = toPy(g.shimuraCurveComponentOrder);
        return d;
    });
    m.def("classify_eisenstein_prime", [](long p, long q, long ell) {
        auto r = classifyEisensteinPrime(p, q, ell);
        py::dict d;
        d["condition"] = toString(r.condition);
        d["ideal"] = r.idealGenerators;
        d["theorem_applies"] = r.theoremApplies;
        return d;
    });

    m.def("detect", [](const std::vector<py::object>& coeffs, long p, long ell, bool assertIrreducible) {
        std::vector<Integer> a;
        for (const auto& c : coeffs) a.push_back(fromPy(c));
        auto r = detect(makeCurve(a), p, ell, assertIrreducible);
        py::dict d;
        d["point_count"] = toPy(r.pointCount);
        d["trace"] = toPy(r.traceAp);
        d["structure"] = py::make_tuple(toPy(r.d1), toPy(r.d2));
        d["scalar_plus"] = r.scalarPlus;
        d["scalar_minus"] = r.scalarMinus;
        d["newness_congruence"] = r.newnessCongruence;
        d["mod3_irreducible"] = r.mod3IrreducibleSufficient ? py::cast(*r.mod3IrreducibleSufficient)
                                                            : py::none();
        d["candidate"] = r.candidate;
        d["unproved_hypotheses"] = r.unprovedHypotheses;
        d["cited_facts"] = r.citedFacts;
        return d;
    }, py::arg("coeffs"), py::arg("p"), py::arg("ell"), py::arg("assert_irreducible") = false);
    m.def("bundled_curve", [](const std::string& label) -> py::object {
        const auto* c = findBundledCurve(label);
        if (!c) return py::none();
        py::dict d;
        d["label"] = c->label;
        d["conductor"] = c->conductor;
        d["coeffs"] = c->coefficients;
        d["p"] = c->p;
        d["ell"] = c->ell;
        return d;
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = runCli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, "Runs one CLI command in-process; returns (exit code, stdout, stderr)");
}
