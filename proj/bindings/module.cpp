#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tspectra/partition.hpp"
#include "tspectra/recipes.hpp"
#include "tspectra/spectrum.hpp"
#include "tspectra/witness.hpp"

namespace py = pybind11;
using namespace tspectra;

namespace {

Partition partition_arg(const std::vector<i64>& parts) {
  auto parsed = Partition::parse(parts);
  if (!parsed.ok()) throw py::value_error(parsed.error().message);
  return parsed.value();
}

template <typename T>
const T& unwrap(const Result<T>& result) {
  if (!result.ok()) {
    const Error& err = result.error();
    if (err.code == Errc::BadArgument || err.code == Errc::OutOfRange) {
      throw py::value_error(err.message);
    }
    throw std::runtime_error(std::string(errc_name(err.code)) + ": " +
                             err.message);
  }
  return result.value();
}

py::dict spectrum_dict(const SpectrumReport& report) {
  py::dict out;
  out["n"] = report.n;
  out["values"] = report.values;
  if (report.multiplicities) {
    py::dict mult;
    for (const auto& [value, count] : *report.multiplicities) {
      mult[py::int_(value)] = count;
    }
    out["multiplicities"] = mult;
  } else {
    out["multiplicities"] = py::none();
  }
  if (report.witnesses) {
    py::dict wit;
    for (const auto& [value, partition] : *report.witnesses) {
      wit[py::int_(value)] = partition.parts();
    }
    out["witnesses"] = wit;
  } else {
    out["witnesses"] = py::none();
  }
  return out;
}

py::dict certificate_dict(const WitnessCertificate& cert) {
  py::dict out;
  out["n"] = cert.n;
  out["target"] = cert.target;
  out["partition"] = cert.partition.parts();
  py::list steps;
  for (const DerivationStep& step : cert.derivation) {
    py::dict entry;
    switch (step.kind) {
      case DerivationStep::Kind::Recipe:
        entry["step"] = "recipe";
        entry["id"] = std::string(to_string(step.recipe));
        entry["a"] = step.a;
        entry["c"] = step.c;
        break;
      case DerivationStep::Kind::Lift:
        entry["step"] = "lift";
        entry["lambda1"] = step.lambda1;
        break;
      case DerivationStep::Kind::Conjugate:
        entry["step"] = "conjugate";
        break;
      case DerivationStep::Kind::Search:
        entry["step"] = "search";
        entry["budget"] = step.budget;
        break;
    }
    steps.append(entry);
  }
  out["derivation"] = steps;
  out["achieved"] = cert.achieved;
  out["verified"] = cert.verified;
  return out;
}

py::dict construction_dict(const ConstructionResult& result) {
  py::dict out;
  out["recipe"] = std::string(to_string(result.recipe));
  out["raw"] = result.raw.parts;
  if (result.partition) {
    out["partition"] = result.partition->parts();
    out["achieved"] = *result.achieved;
  } else {
    out["partition"] = py::none();
    out["achieved"] = py::none();
  }
  out["target"] = result.target;
  return out;
}

}  // namespace

PYBIND11_MODULE(_tspectra, m) {
  m.doc() = "exact spectra of the all-transpositions Cayley graph";

  m.def("validate", [](const std::vector<i64>& parts) {
    return partition_arg(parts).parts();
  });
  m.def("conjugate", [](const std::vector<i64>& parts) {
    return partition_arg(parts).conjugate().parts();
  });
  m.def("eigenvalue", [](const std::vector<i64>& parts) {
    return eigenvalue(partition_arg(parts));
  });
  m.def("content_sum", [](const std::vector<i64>& parts) {
    return content_sum(partition_arg(parts));
  });
  m.def("arm_leg_decomposition", [](const std::vector<i64>& parts) {
    std::vector<std::pair<i64, i64>> out;
    for (const ArmLeg& pair : arm_leg_decomposition(partition_arg(parts))) {
      out.emplace_back(pair.arm, pair.leg);
    }
    return out;
  });
  m.def("hook_dimension", [](const std::vector<i64>& parts) {
    return unwrap(hook_dimension(partition_arg(parts)));
  });
  m.def("partition_count", &partition_count);
  m.def("partitions", [](i64 n) {
    if (n < 0 || n > 60) {
      throw py::value_error("partitions() materializes the full list; n must be in [0, 60]");
    }
    std::vector<std::vector<i64>> out;
    PartitionGenerator gen(n);
    while (const std::vector<i64>* p = gen.next()) out.push_back(*p);
    return out;
  });

  m.def(
      "brute_spectrum",
      [](i64 n, bool witnesses, int threads, bool limit_override) {
        BruteOptions opts;
        opts.with_witnesses = witnesses;
        opts.threads = threads;
        opts.limit_override = limit_override;
        return spectrum_dict(unwrap(brute_spectrum(n, opts)));
      },
      py::arg("n"), py::arg("witnesses") = false, py::arg("threads") = 1,
      py::arg("limit_override") = false);
  m.def("spectrum_with_multiplicity",
        [](i64 n) { return spectrum_dict(unwrap(spectrum_with_multiplicity(n))); });
  m.def("cayley_adjacency_spectrum",
        [](i64 n) { return spectrum_dict(unwrap(cayley_adjacency_spectrum(n))); });

  m.def("recipe_catalog", [] {
    std::vector<std::string> names;
    for (const Recipe& recipe : recipe_catalog()) {
      names.emplace_back(to_string(recipe.id));
    }
    return names;
  });
  m.def("apply_recipe", [](const std::string& id, i64 n, i64 a, i64 c) {
    auto parsed = recipe_from_string(id);
    if (!parsed) throw py::value_error("unknown recipe id: " + id);
    return construction_dict(unwrap(apply_recipe(*parsed, n, a, c)));
  });
  m.def("small_value",
        [](i64 n, i64 e) { return construction_dict(unwrap(small_value(n, e))); });

  m.def("witness", [](i64 n, i64 e) -> py::object {
    auto cert = witness(n, e);
    if (!cert.ok()) {
      if (cert.error().code == Errc::BadArgument) {
        throw py::value_error(cert.error().message);
      }
      return py::none();
    }
    return certificate_dict(*cert);
  });
  m.def("coverage", [](i64 n, i64 lo, i64 hi) {
    CoverageReport report = coverage(n, lo, hi);
    py::dict out;
    out["n"] = report.n;
    out["lo"] = report.lo;
    out["hi"] = report.hi;
    out["covered"] = report.covered;
    out["missing"] = report.missing;
    return out;
  });
  m.def("theorem_c_inequalities", &theorem_c_inequalities);
}
