#include "hdepth/errors.hpp"
#include "hdepth/hyp.hpp"
#include "hdepth/qdepth.hpp"
#include "hdepth/spec.hpp"
#include "hdepth/squarefree.hpp"
#include "hdepth/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::int_ toPy(const hdepth::Integer& v) { return py::int_(py::str(v.get_str())); }

py::list toPy(const std::vector<hdepth::Integer>& values) {
  py::list out;
  for (const auto& v : values) out.append(toPy(v));
  return out;
}

py::dict toPy(const hdepth::QDepthResult& r) {
  py::dict out;
  out["qdepth"] = r.qdepth;
  out["lower_bound"] = r.lowerBound;
  out["upper_bound"] = r.upperBound;
  out["certificate"] = toPy(r.certificate.values);
  out["certificate_start"] = r.certificate.startK;
  if (r.refutation) {
    out["refutation"] = py::make_tuple(r.refutation->d, r.refutation->k, toPy(r.refutation->beta));
  } else {
    out["refutation"] = py::none();
  }
  return out;
}

hdepth::SquarefreeQuotient quotient(int n, const std::string& J, const std::string& I) {
  return {hdepth::parseIdeal(J, n), hdepth::parseIdeal(I, n)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hilbert depth of Hilbert functions";
  static py::exception<hdepth::Error> error(m, "HdepthError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hdepth::Error& e) {
      py::set_error(error, (std::string(hdepth::toString(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("qdepth", [](const std::string& spec) { return toPy(hdepth::qdepth(hdepth::parseFunction(spec))); },
        py::arg("spec"));
  m.def("beta_table",
        [](const std::string& spec, long d) { return toPy(hdepth::betaTable(hdepth::parseFunction(spec), d).values); },
        py::arg("spec"), py::arg("d"));
  m.def("evaluate", [](const std::string& spec, long k) { return toPy(hdepth::evaluate(hdepth::parseFunction(spec), k)); },
        py::arg("spec"), py::arg("k"));
  m.def("canonical", [](const std::string& spec) { return hdepth::toString(hdepth::parseFunction(spec)); },
        py::arg("spec"));

  m.def("alpha_vector",
        [](int n, const std::string& J, const std::string& I) { return toPy(hdepth::alphaVector(quotient(n, J, I))); },
        py::arg("n"), py::arg("J"), py::arg("I"));
  m.def(
      "sqf",
      [](int n, const std::string& J, const std::string& I) {
        const auto q = quotient(n, J, I);
        py::dict out;
        out["alpha"] = toPy(hdepth::alphaVector(q));
        out["qdepth_quotient"] = toPy(hdepth::qdepthQuotient(q));
        out["qdepth_module"] = toPy(hdepth::qdepth(hdepth::mModule(q)));
        return out;
      },
      py::arg("n"), py::arg("J"), py::arg("I"));

  m.def(
      "gauss2f1",
      [](long k, long n) {
        const auto v = hdepth::gauss2F1(k, n);
        return py::module_::import("fractions").attr("Fraction")(toPy(hdepth::Integer(v.get_num())),
                                                                 toPy(hdepth::Integer(v.get_den())));
      },
      py::arg("k"), py::arg("n"));
  m.def("big_e", [](long n, long k) { return toPy(hdepth::bigE(n, k)); }, py::arg("n"), py::arg("k"));

  m.def("battery_names", &hdepth::batteryNames);
  m.def(
      "verify",
      [](const std::string& name, long max_n, long max_degree, long trials, std::uint64_t seed, unsigned threads) {
        hdepth::BatteryConfig config;
        config.maxN = max_n;
        config.maxDegree = max_degree;
        config.trials = trials;
        config.seed = seed;
        config.threads = threads;
        hdepth::VerificationReport r;
        {
          py::gil_scoped_release release;
          r = hdepth::runBattery(name, config);
        }
        py::list violations;
        for (const auto& v : r.violations) violations.append(py::make_tuple(v.descriptor, v.expected, v.actual));
        py::dict out;
        out["battery"] = r.batteryName;
        out["cases_run"] = r.casesRun;
        out["passed"] = r.passed();
        out["violations"] = violations;
        out["notes"] = r.notes;
        return out;
      },
      py::arg("name"), py::arg("max_n") = 6, py::arg("max_degree") = 5, py::arg("trials") = 200, py::arg("seed") = 1,
      py::arg("threads") = 1);
}
