#include <pybind11/pybind11.h>

void bind_selgames(pybind11::module_& m);

PYBIND11_MODULE(_selgames_core, m) { bind_selgames(m); }
