#pragma once

// Shared diagram codes: classical trefoil, its mirror, the virtual trefoil,
// one-crossing kinks, a reducible R2 pair, an R3-admissible triangle, a
// 4-chord diagram with two odd chords, and trefoil # virtual trefoil.
namespace fixtures {

inline constexpr const char* kT3 = "O1+U2+O3+U1+O2+U3+";
inline constexpr const char* kT3M = "O1-U2-O3-U1-O2-U3-";
inline constexpr const char* kVT = "O1+O2+U1+U2+";
inline constexpr const char* kK1 = "O1+U1+";
inline constexpr const char* kK1M = "O1-U1-";
inline constexpr const char* kNI4 = "O3+O1+U3+O2+U1+O4+U2+U4+";
inline constexpr const char* kR2F = "O1+O2-U2-U1+";
inline constexpr const char* kR3F = "O1+O2-U2-U3+O3+U1+";
inline constexpr const char* kINS = "O1+U2+O3+U1+O2+U3+O4+O5+U4+U5+";

} // namespace fixtures
