// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace polsar {

inline constexpr const char* kToolName = "polsarclass";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace polsar
