#ifndef EMSIM_VERSION_HPP
#define EMSIM_VERSION_HPP

#define EMSIM_VERSION "0.1.0"

#endif
