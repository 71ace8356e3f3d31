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

import hashlib
import json
import logging
import os
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from lfpp.exc import CacheError, CorruptedArtifact
from lfpp.gff import codec
from . actions import ActivityLog, remove, write
from . models import Base, CacheEntry, KINDS

__all__ = ['CacheIndex', 'EstimateStore', 'canonical', 'digest',
           'cache_lookup', 'ESTIMATE_MAGIC', 'ESTIMATE_VERSION']

ESTIMATE_MAGIC = 'LFPE'
ESTIMATE_VERSION = 1
INDEX_NAME = 'index.sqlite'

log = logging.getLogger(__name__)


def _exact(value):
    """ floats spelled by their bit pattern, containers recursively """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, float):
        return value.hex()
    if isinstance(value, dict):
        return {str(k): _exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_exact(v) for v in value]
    return value


def canonical(params):
    return json.dumps(_exact(params), sort_keys=True, separators=(',', ':'))


def digest(params):
    """ sha256 of the canonical form: one ulp anywhere changes the key """
    return hashlib.sha256(canonical(params).encode('utf-8')).hexdigest()


def encode_estimate(data):
    return json.dumps({'magic': ESTIMATE_MAGIC, 'version': ESTIMATE_VERSION,
                       'estimate': data}, sort_keys=True, indent=2)


def decode_estimate(text, path):
    try:
        data = json.loads(text)

    except ValueError as e:
        raise CorruptedArtifact(path, 'invalid JSON: {}'.format(e))

    if not isinstance(data, dict) or data.get('magic') != ESTIMATE_MAGIC:
        raise CorruptedArtifact(path, 'bad magic')
    if data.get('version') != ESTIMATE_VERSION:
        raise CorruptedArtifact(path, 'unsupported version {}'
                                .format(data.get('version')))
    if not isinstance(data.get('estimate'), dict):
        raise CorruptedArtifact(path, 'missing estimate')
    return data['estimate']


class CacheIndex(object):
    """ Content-addressed artifacts under ``root``, indexed in SQLite. """

    def __init__(self, root):
        self.root = os.path.abspath(root)
        self.log = logging.getLogger("{}.{}".format(__name__,
                                                    self.__class__.__name__))
        for kind in KINDS:
            os.makedirs(os.path.join(self.root, kind), exist_ok=True)

        self.engine = create_engine('sqlite:///{}'.format(
            os.path.join(self.root, INDEX_NAME)))
        Base.metadata.create_all(self.engine)
        self.Session = sessionmaker(bind=self.engine)
        self.warnings = []

    def session(self):
        session = self.Session()
        ActivityLog.attach_to(session)
        return session

    @property
    def entries(self):
        session = self.Session()
        try:
            return [e.to_dict() for e in
                    session.query(CacheEntry).order_by(CacheEntry.created,
                                                       CacheEntry.key_hash)]
        finally:
            session.close()

    def path_for(self, kind, key_hash):
        return os.path.join(self.root, kind, key_hash + KINDS[kind])

    def _verify(self, kind, path):
        if kind == 'field':
            codec.read_header(path)
            codec.read(path)
        else:
            with open(path) as f:
                decode_estimate(f.read(), path)

    def lookup(self, params, kind):
        """ path of the artifact stored for ``params``, None on a miss """
        if kind not in KINDS:
            raise CacheError('unknown artifact kind {}'.format(kind))

        key_hash = digest(params)
        session = self.Session()
        try:
            entry = session.get(CacheEntry, key_hash)
            if entry is None or entry.kind != kind:
                return None
            path = entry.path

        finally:
            session.close()

        try:
            self._verify(kind, path)

        except (CorruptedArtifact, OSError) as e:
            message = 'evicting corrupted cache entry {}: {}'.format(
                key_hash, e)
            self.log.warning(message)
            self.warnings.append(message)
            self.evict(key_hash)
            return None

        self.log.debug("cache hit %s", key_hash)
        return path

    def store(self, params, kind, content):
        """ write ``content`` atomically and index it """
        key_hash = digest(params)
        path = self.path_for(kind, key_hash)
        session = self.session()
        try:
            session.activity_log.add(write, path, content)
            session.merge(CacheEntry(key_hash=key_hash, kind=kind,
                                     path=path))
            session.commit()

        except Exception:
            session.rollback()
            raise

        finally:
            session.close()

        self.log.debug("stored %s %s", kind, key_hash)
        return path

    def evict(self, key_hash):
        session = self.session()
        try:
            entry = session.get(CacheEntry, key_hash)
            if entry is not None:
                session.activity_log.add(remove, entry.path)
                session.delete(entry)
            session.commit()

        except Exception:
            session.rollback()
            raise

        finally:
            session.close()

    # field artifacts

    def load_field(self, params):
        path = self.lookup(params, 'field')
        return codec.read(path) if path else None

    def save_field(self, params, field):
        return self.store(params, 'field', codec.dumps(field))


def cache_lookup(index, params, kind):
    return index.lookup(params, kind)


class EstimateStore(object):
    """ ``EstimateCache`` backend persisting MedianEstimates in the index """

    def __init__(self, index):
        self.index = index

    def load(self, key):
        path = self.index.lookup(key, 'estimate')
        if path is None:
            return None
        with open(path) as f:
            return decode_estimate(f.read(), path)

    def save(self, key, data):
        self.index.store(key, 'estimate', encode_estimate(data))
