#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cryassess/cohort.hpp"
#include "cryassess/cohortgen.hpp"
#include "cryassess/grading.hpp"
#include "cryassess/ingest.hpp"
#include "cryassess/lagscore.hpp"
#include "cryassess/oracle.hpp"
#include "cryassess/progression.hpp"
#include "cryassess/report.hpp"

namespace py = pybind11;
using namespace cry;

PYBIND11_MODULE(_cryassess, m) {
    m.doc() = "Learning-assessment analytics: lag scores, progression matrices, grades";

    py::enum_<State>(m, "State")
        .value("JammuKashmir", State::JammuKashmir)
        .value("Jharkhand", State::Jharkhand)
        .value("Manipur", State::Manipur)
        .value("WestBengal", State::WestBengal);
    py::enum_<Sex>(m, "Sex").value("Male", Sex::Male).value("Female", Sex::Female);
    py::enum_<Grade>(m, "Grade")
        .value("A", Grade::A)
        .value("B", Grade::B)
        .value("C", Grade::C)
        .value("D", Grade::D)
        .value("E", Grade::E);
    py::enum_<GroupBy>(m, "GroupBy")
        .value("NONE", GroupBy::None)
        .value("SEX", GroupBy::BySex)
        .value("STATE", GroupBy::ByState);

    py::class_<ImprovementFlags>(m, "ImprovementFlags")
        .def(py::init([](int a, int b, int c, int d) {
                 for (int v : {a, b, c, d})
                     if (v != 0 && v != 1)
                         throw py::value_error("improvement flags must be 0 or 1");
                 return ImprovementFlags{{a, b, c, d}};
             }),
             py::arg("lang1_oral"), py::arg("lang2_oral"), py::arg("math_oral"),
             py::arg("writing"))
        .def_readonly("bits", &ImprovementFlags::bits)
        .def("level", &ImprovementFlags::level);

    py::class_<AssessmentRecord>(m, "AssessmentRecord")
        .def(py::init<>())
        .def_readwrite("child_id", &AssessmentRecord::child_id)
        .def_readwrite("center", &AssessmentRecord::center)
        .def_readwrite("state", &AssessmentRecord::state)
        .def_readwrite("sex", &AssessmentRecord::sex)
        .def_readwrite("age_appropriate_class", &AssessmentRecord::age_appropriate_class)
        .def_readwrite("compatible_class", &AssessmentRecord::compatible_class)
        .def_readwrite("attendance", &AssessmentRecord::attendance)
        .def_readwrite("improvements", &AssessmentRecord::improvements)
        .def_readwrite("quarter", &AssessmentRecord::quarter)
        .def("improvement_level", [](const AssessmentRecord& r) { return improvement_level(r); })
        .def("class_lag", [](const AssessmentRecord& r) { return class_lag(r); });

    py::class_<Cohort>(m, "Cohort")
        .def("__len__", &Cohort::size)
        .def("quarters", &Cohort::quarters)
        .def("state_counts", &Cohort::state_counts)
        .def("sex_counts", &Cohort::sex_counts)
        .def("records", &Cohort::records, py::return_value_policy::reference_internal);

    py::class_<RowRejection>(m, "RowRejection")
        .def_readonly("row", &RowRejection::row)
        .def_readonly("reason", &RowRejection::reason);

    py::class_<LagScoreTable>(m, "LagScoreTable")
        .def_readonly("quarter", &LagScoreTable::quarter)
        .def_readonly("lags", &LagScoreTable::lags)
        .def_readonly("scores", &LagScoreTable::scores)
        .def_readonly("row_counts", &LagScoreTable::row_counts)
        .def("score", &LagScoreTable::score, py::arg("lag"), py::arg("level"));

    py::class_<ProgressionRateMatrix>(m, "ProgressionRateMatrix")
        .def_readonly("from_quarter", &ProgressionRateMatrix::from_quarter)
        .def_readonly("to_quarter", &ProgressionRateMatrix::to_quarter)
        .def_readonly("row_levels", &ProgressionRateMatrix::row_levels)
        .def_readonly("col_levels", &ProgressionRateMatrix::col_levels)
        .def_readonly("counts", &ProgressionRateMatrix::counts)
        .def_readonly("row_sums", &ProgressionRateMatrix::row_sums)
        .def_readonly("rates", &ProgressionRateMatrix::rates)
        .def_readonly("column_sums", &ProgressionRateMatrix::column_sums)
        .def_readonly("dropped_rows", &ProgressionRateMatrix::dropped_rows)
        .def_readonly("dropped_cols", &ProgressionRateMatrix::dropped_cols)
        .def_readonly("paired_children", &ProgressionRateMatrix::paired_children);

    py::class_<ProgressionScore>(m, "ProgressionScore")
        .def_readonly("s", &ProgressionScore::s)
        .def_readonly("s_star", &ProgressionScore::s_star)
        .def_readonly("row_index_sum", &ProgressionScore::row_index_sum);

    py::class_<GradeDistribution>(m, "GradeDistribution")
        .def_readonly("quarter", &GradeDistribution::quarter)
        .def_readonly("group", &GradeDistribution::group)
        .def_readonly("proportions", &GradeDistribution::proportions)
        .def_readonly("population", &GradeDistribution::population);

    py::class_<GenSpec>(m, "GenSpec")
        .def(py::init<>())
        .def_readwrite("seed", &GenSpec::seed)
        .def_readwrite("population", &GenSpec::population)
        .def_readwrite("quarters", &GenSpec::quarters)
        .def_readwrite("lag_weights", &GenSpec::lag_weights)
        .def_readwrite("initial_levels", &GenSpec::initial_levels)
        .def_readwrite("kernel", &GenSpec::kernel)
        .def_readwrite("sex_weights", &GenSpec::sex_weights)
        .def_readwrite("state_weights", &GenSpec::state_weights)
        .def_static("identity_kernel", &GenSpec::identity_kernel)
        .def_static("upper_triangular_kernel", &GenSpec::upper_triangular_kernel);

    m.def(
        "load_quarter",
        [](const std::filesystem::path& path, int quarter) {
            auto result = load_quarter(path, quarter);
            return py::make_tuple(result.records, result.rejections);
        },
        py::arg("path"), py::arg("quarter"),
        "Parse one quarter's CSV; returns (records, rejections).");
    m.def(
        "load_combined",
        [](const std::filesystem::path& path) {
            auto result = load_combined(path);
            return py::make_tuple(result.records, result.rejections);
        },
        py::arg("path"), "Parse a combined CSV carrying a quarter column.");
    m.def(
        "build_cohort",
        [](std::vector<AssessmentRecord> records) {
            auto result = build_cohort(std::move(records));
            return py::make_tuple(std::move(result.cohort), result.duplicates.size());
        },
        py::arg("records"), "Deduplicate and index records; returns (cohort, n_duplicates).");

    m.def(
        "lag_score_table",
        [](const Cohort& cohort, int quarter, bool include_positive_lags) {
            return lag_score_table(cohort, quarter, {include_positive_lags});
        },
        py::arg("cohort"), py::arg("quarter"), py::arg("include_positive_lags") = false);
    m.def("score_student", &score_student, py::arg("table"), py::arg("record"));

    m.def(
        "progression_matrix",
        [](const Cohort& cohort, int from_q, int to_q) {
            return progression_matrix(cohort, from_q, to_q);
        },
        py::arg("cohort"), py::arg("from_q"), py::arg("to_q"));
    m.def(
        "progression_score",
        [](const ProgressionRateMatrix& matrix, bool weighted) {
            return progression_score(matrix, {weighted});
        },
        py::arg("matrix"), py::arg("weighted") = false);

    m.def("grade_of", [](int level) { return grade_of(level); }, py::arg("level"));
    m.def("grade_distribution", &grade_distribution, py::arg("cohort"), py::arg("quarter"),
          py::arg("group_by") = GroupBy::None);
    m.def(
        "grouped_progression",
        [](const Cohort& cohort, int from_q, int to_q, GroupBy group_by, bool weighted) {
            return grouped_progression(cohort, from_q, to_q, group_by, {weighted});
        },
        py::arg("cohort"), py::arg("from_q"), py::arg("to_q"), py::arg("group_by"),
        py::arg("weighted") = false);

    m.def("generate", &generate, py::arg("spec"));
    m.def("load_gen_spec", &load_gen_spec, py::arg("path"));
    m.def("write_cohort_csv", &write_cohort_csv, py::arg("cohort"), py::arg("path"));

    m.def("lag_scores_oracle", &oracle::lag_scores, py::arg("cohort"), py::arg("quarter"),
          py::arg("include_positive_lags") = false);
    m.def(
        "progression_oracle",
        [](const Cohort& cohort, int from_q, int to_q) {
            auto p = oracle::progression(cohort, from_q, to_q);
            return py::make_tuple(p.s, p.s_star);
        },
        py::arg("cohort"), py::arg("from_q"), py::arg("to_q"));

    m.def("lag_score_markdown",
          [](const LagScoreTable& t) { return to_markdown(t); });
    m.def("progression_markdown",
          [](const ProgressionRateMatrix& t) { return to_markdown(t); });
}
