#include "cosserat/io/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace cosserat::io {

namespace {

constexpr std::array<const char*, 9> kKinematicNames = {"Psi1", "Psi2", "W",  "Om01", "Om02",
                                                        "Om3",  "U1",   "U2", "Om03"};
constexpr std::array<const char*, 20> kStrainNames = {
    "e11",  "e12",  "e21",  "e22",  "om1",  "om2",  "oms1", "oms2", "t011", "t012",
    "t021", "t022", "t31",  "t32",  "up11", "up12", "up21", "up22", "t031", "t032"};
constexpr std::array<const char*, 20> kResultantNames = {
    "M11", "M12", "M21", "M22", "Q1",  "Q2",  "Qs1", "Qs2", "R11", "R12",
    "R21", "R22", "Ss1", "Ss2", "N11", "N12", "N21", "N22", "Ms1", "Ms2"};

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

void write_fields_csv(std::ostream& os, const PlateSolution& sol) {
    os << "x1,x2";
    for (const char* n : kKinematicNames) os << ',' << n;
    for (const char* n : kStrainNames) os << ',' << n;
    for (const char* n : kResultantNames) os << ',' << n;
    os << '\n';
    const FieldGrid& g = sol.grid;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int k = g.idx(i, j);
            os << format_double(g.x(i)) << ',' << format_double(g.y(j));
            for (int f = 0; f < 9; ++f) os << ',' << format_double(sol.fields.comp[f][k]);
            for (int s = 0; s < 20; ++s) os << ',' << format_double(sol.strains.comp[s][k]);
            for (int s = 0; s < 20; ++s) os << ',' << format_double(sol.resultants.comp[s][k]);
            os << '\n';
        }
}

}  // namespace cosserat::io
