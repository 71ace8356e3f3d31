#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Copyright 2026 The lfpp authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import datetime
import logging
from sqlalchemy import Column, DateTime, Unicode
from sqlalchemy.orm import declarative_base
from lfpp.utils.decorators import classproperty

__all__ = ['Base', 'CacheEntry', 'KINDS']

# artifact kinds and the extension of their files
KINDS = {'field': '.lfpf', 'estimate': '.json'}


class LfppBase(object):

    @classproperty
    @classmethod
    def log(cls):
        if '_log' in cls.__dict__:
            return cls._log

        cls._log = logging.getLogger("{}.{}".format(cls.__module__,
                                                    cls.__name__))
        return cls._log

    def to_dict(self):
        return {c.name: getattr(self, c.name) for c in self.__table__.columns}


Base = declarative_base(cls=LfppBase)


class CacheEntry(Base):

    __tablename__ = u'cache_entries'

    key_hash = Column(Unicode(64), primary_key=True)
    kind = Column(Unicode(16), nullable=False)
    path = Column(Unicode(1024), nullable=False)
    created = Column(DateTime, nullable=False,
                     default=datetime.datetime.utcnow)

    def to_dict(self):
        res = super(CacheEntry, self).to_dict()
        res['created'] = self.created.isoformat() if self.created else None
        return res

    def __repr__(self):
        return '<CacheEntry {self.kind} {self.key_hash:.12}>'.format(self=self)
