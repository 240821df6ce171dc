// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_VERSION_HPP
#define NETFAIR_VERSION_HPP

namespace netfair {

inline constexpr const char* kVersion = "0.1.0";

} // namespace netfair

#endif // NETFAIR_VERSION_HPP
