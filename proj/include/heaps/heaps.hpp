#ifndef heaps_heaps_hpp
#define heaps_heaps_hpp

#include "heaps/error.hpp"
#include "heaps/checked.hpp"
#include "heaps/polynomial.hpp"
#include "heaps/graph.hpp"
#include "heaps/heap.hpp"
#include "heaps/rack.hpp"
#include "heaps/bijection.hpp"
#include "heaps/chromatic.hpp"
#include "heaps/verify.hpp"

#endif /* heaps_heaps_hpp */
