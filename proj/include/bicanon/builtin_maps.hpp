/*
   Copyright 2026 The bicanon Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BICANON_BUILTIN_MAPS_HPP
#define BICANON_BUILTIN_MAPS_HPP

#include "birational.hpp"

namespace bicanon::maps {

/// (w, y, z) -> (i w / (y^2 z^3), 1/y, 1/z); preserves family 1.
inline BirMap sigma1() {
    const auto &v = VarTable::standard();
    return BirMap::parse(Frame::enriques(*v), "i*w/(y^2*z^3)", "1/y", "1/z", "sigma1");
}

/// (w, y, z) -> (zeta8 y^3 w / z^4, y/z, y^2/z); preserves family 2.
inline BirMap sigma2() {
    const auto &v = VarTable::standard();
    return BirMap::parse(Frame::enriques(*v), "zeta8*y^3*w/z^4", "y/z", "y^2/z", "sigma2");
}

/// (w, y, z) -> (w y^3 / z^3, i y, y^2/z); preserves family 3.
inline BirMap sigma3() {
    const auto &v = VarTable::standard();
    return BirMap::parse(Frame::enriques(*v), "w*y^3/z^3", "i*y", "y^2/z", "sigma3");
}

inline BirMap sigma(int k) {
    switch (k) {
    case 1: return sigma1();
    case 2: return sigma2();
    case 3: return sigma3();
    default: throw schema_error("unknown built-in map sigma" + std::to_string(k));
    }
}

/// Covering involution (W, Y, Z) -> (-W, -Y, -Z) of the K3 cover.
inline BirMap epsilon() {
    const auto &v = VarTable::standard();
    return BirMap::parse(Frame::k3(*v), "-W", "-Y", "-Z", "epsilon");
}

/// Lift of sigma1 to the K3 cover: (W, Y, Z) -> (i W / (Y^2 Z^2), 1/Y, 1/Z).
inline BirMap k3_lift1() {
    const auto &v = VarTable::standard();
    return BirMap::parse(Frame::k3(*v), "i*W/(Y^2*Z^2)", "1/Y", "1/Z", "k3_lift1");
}

/// Lift of sigma2 to the K3 cover: (W, Y, Z) -> (zeta8 W / Z^2, 1/Z, Y).
inline BirMap k3_lift2() {
    const auto &v = VarTable::standard();
    return BirMap::parse(Frame::k3(*v), "zeta8*W/Z^2", "1/Z", "Y", "k3_lift2");
}

} // namespace bicanon::maps

#endif
