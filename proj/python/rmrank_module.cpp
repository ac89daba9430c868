#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(rmrank, m) {
    m.doc() = "rank-metric Reed-Muller codes over Galois extension towers";
    m.attr("__version__") = "0.1.0";
}
