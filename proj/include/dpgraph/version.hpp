#ifndef DPGRAPH_VERSION_HPP
#define DPGRAPH_VERSION_HPP

namespace dpgraph {

inline constexpr const char* kVersion = "0.1.0";

} // namespace dpgraph

#endif
