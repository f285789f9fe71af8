#include <pybind11/pybind11.h>
PYBIND11_MODULE(_kakutani, m) { m.doc() = "placeholder"; }
